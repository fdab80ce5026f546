#include "doctest.h"
TEST_SUITE("codes") {}
