#include "doctest.h"
TEST_SUITE("lattice") {}
