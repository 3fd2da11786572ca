#include <iostream>

#include "legproj/cli.hpp"

int main(int argc, char** argv)
{
    return legproj::run_cli(argc, argv, std::cout, std::cerr);
}
