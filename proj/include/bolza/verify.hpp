#pragma once

#include <string>
#include <vector>

#include "bolza/config.hpp"

namespace bolza {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyReport {
    std::vector<CriterionResult> results;
    bool all_pass() const;
    std::string to_json() const;
};

// Runs the acceptance criteria; cfg.kmax < 10 restricts the complexity rows
// (skipped, not failed).  Prints one line per criterion to the given stream
// if verbose.
VerifyReport run_acceptance(const RunConfig& cfg, bool verbose = true);

}  // namespace bolza
