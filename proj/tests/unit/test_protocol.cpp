#include <doctest.h>

TEST_SUITE_BEGIN("protocol");

TEST_SUITE_END();
