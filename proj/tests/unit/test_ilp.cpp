#include "doctest.h"

TEST_SUITE("ilp") {}
