#include <iostream>

#include "tight/cli.hpp"

int main(int argc, char** argv)
{
    return tight::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
