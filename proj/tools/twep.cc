#include <iostream>
#include <string>
#include <vector>

#include "twep/cli.h"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twep::run_cli(args, std::cout, std::cerr);
}
