#include "summatoria/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return summatoria::cli::main_entry(argc, argv, std::cout, std::cerr);
}
