#include <doctest.h>

TEST_SUITE_BEGIN("verify");
TEST_SUITE_END();
