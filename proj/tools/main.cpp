#include <iostream>

#include "facering/cli.hpp"

int main(int argc, char** argv)
{
    return facering::run_cli(argc, argv, std::cout, std::cerr);
}
