#include "cli.hh"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return packbound::cli::run(args, std::cin, std::cout, std::cerr);
}
