#include <doctest.h>

TEST_SUITE_BEGIN("palm");
TEST_SUITE_END();
