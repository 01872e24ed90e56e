#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace clusterkit {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

// The exact-combinatorics verification suite: every check the library
// promises, each with a pass/fail verdict. Deterministic for a fixed seed.
std::vector<CriterionResult> runAcceptanceSuite(unsigned rngSeed = 20240915);

// Prints one line per criterion ("PASS  3  exchange-graph counts ...").
void printSuite(std::ostream& out, const std::vector<CriterionResult>& results);

bool allPass(const std::vector<CriterionResult>& results);

} // namespace clusterkit
