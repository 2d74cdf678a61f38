#include <doctest.h>

TEST_SUITE_BEGIN("bench");

TEST_SUITE_END();
