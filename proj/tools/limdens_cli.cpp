#include <iostream>
#include <vector>

#include "limdens/manifest.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return limdens::cli_run(args, std::cout, std::cerr);
}
