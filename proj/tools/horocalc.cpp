#include <iostream>
#include <string>
#include <vector>

#include "horocalc/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return horocalc::run(args, std::cout, std::cerr);
}
