// Single compilation unit for the amalgamated Catch2 distribution,
// including its default main.
#include <catch2/catch_amalgamated.cpp>
