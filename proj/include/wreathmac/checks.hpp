#pragma once

#include <functional>
#include <string>
#include <vector>

namespace wreathmac {

struct CheckCase {
    std::string group;
    std::string name;
    std::function<bool(std::string& detail)> run;
};

// Every worked example pinned from the source material, grouped by module.
const std::vector<CheckCase>& paper_example_checks();

struct CheckOutcome {
    std::string group;
    std::string name;
    bool pass;
    std::string detail;
};

// Runs the given cases (in parallel when jobs > 1); outcomes keep case order.
std::vector<CheckOutcome> run_checks(const std::vector<CheckCase>& cases, int jobs = 1);

}  // namespace wreathmac
