#include <iostream>

#include "shicores/cli.hpp"

int main(int argc, char** argv)
{
    return shicores::run_cli(argc, argv, std::cout, std::cerr);
}
