#include "doctest.h"
TEST_SUITE("transport") {}
