#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "nontrans/engine.hpp"

namespace nontrans {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    bool extended = false;  // counting tier runs to n = 12 instead of n = 7
    EngineCaps caps{};
};

// The nine reproduction criteria. Each prints nothing; the caller renders.
// `progress` (optional) receives one line per finished criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            std::ostream* progress = nullptr);

std::string format_criterion_line(const CriterionResult& r);

}  // namespace nontrans
