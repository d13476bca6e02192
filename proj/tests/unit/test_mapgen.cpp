#include "doctest.h"

TEST_SUITE("mapgen") {}
