#include <cstring>
#include <iostream>

#include "clusterkit/verify.hpp"

int main(int argc, char** argv) {
    unsigned seed = 20240915;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--rand-seed") == 0 && i + 1 < argc)
            seed = static_cast<unsigned>(std::stoul(argv[++i]));
    }
    const auto results = clusterkit::runAcceptanceSuite(seed);
    clusterkit::printSuite(std::cout, results);
    const bool ok = clusterkit::allPass(results);
    std::cout << (ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED") << "\n";
    return ok ? 0 : 1;
}
