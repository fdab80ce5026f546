#include "doctest.h"
TEST_SUITE("certifier") {}
