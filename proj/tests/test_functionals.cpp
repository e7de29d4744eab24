#include <doctest.h>

TEST_SUITE_BEGIN("functionals");
TEST_SUITE_END();
