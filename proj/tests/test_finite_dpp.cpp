#include <doctest.h>

TEST_SUITE_BEGIN("finite_dpp");
TEST_SUITE_END();
