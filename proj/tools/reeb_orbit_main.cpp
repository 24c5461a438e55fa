#include <iostream>
#include <string>
#include <vector>

#include "reeb_orbit/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return reeb_orbit::run_cli(args, std::cout, std::cerr);
}
