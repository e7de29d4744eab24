#include <doctest.h>

TEST_SUITE_BEGIN("sampler");
TEST_SUITE_END();
