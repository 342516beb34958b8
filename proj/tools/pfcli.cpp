#include <iostream>
#include <string>
#include <vector>

#include "pf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    pf::CliResult res = pf::run_cli(args);
    if (res.exit_code == 1)
        std::cerr << res.output << "\n";
    else
        std::cout << res.output << "\n";
    return res.exit_code;
}
