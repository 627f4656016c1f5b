#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nontrans/engine.hpp"
#include "nontrans/laurent.hpp"

namespace nontrans {

struct VerifyReport {
    bool ok = true;
    long long checks = 0;
    std::vector<std::string> failures;  // minimal counterexamples, one line each

    void fail(std::string line) {
        ok = false;
        failures.push_back(std::move(line));
    }
};

using FComputer = std::function<LaurentPoly(const std::vector<int>&)>;

// Oracle equivalence suite:
//  - DP F == brute-force F termwise, k=3 totals <= max_total,
//    k=4 totals <= max(0, max_total - 2)
//  - condition "all stats >= 1" <=> deck-cycle dominance, exhaustively for
//    k=3 words with <= max_total letters
//  - reversal symmetry F(q) = F(1/q), and cyclic variable symmetry at equal
//    counts, same ranges
// f_impl overrides the DP under test (used to prove the harness catches a
// corrupted recurrence).
VerifyReport run_verification(int max_total, const FComputer& f_impl = {});

}  // namespace nontrans
