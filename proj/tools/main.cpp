#include <iostream>

#include <fibbern/cli.hpp>

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return fibbern::run_cli(args, std::cout, std::cerr);
}
