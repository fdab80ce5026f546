#include "doctest.h"
TEST_SUITE("edit") {}
