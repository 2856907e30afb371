#include <string>
#include <vector>

#include "fhmp/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fhmp::run_cli(args);
}
