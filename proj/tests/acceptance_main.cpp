#include <iostream>

#include "limdens/acceptance.hpp"

int main(int argc, char** argv) {
    std::string only = argc > 1 ? argv[1] : "";
    auto results = limdens::run_acceptance(std::cout, only);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    std::cout << results.size() - static_cast<size_t>(failed) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
