#include <iostream>

#include "gacfit/cli/commands.hpp"

int main(int argc, char** argv)
{
    return gacfit::cli::run_cli(argc, argv, std::cout, std::cerr);
}
