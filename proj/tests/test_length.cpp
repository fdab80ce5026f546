#include "doctest.h"
TEST_SUITE("length") {}
