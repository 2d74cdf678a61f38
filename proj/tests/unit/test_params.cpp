#include <doctest.h>

TEST_SUITE_BEGIN("params");

TEST_SUITE_END();
