#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nontrans/engine.hpp"
#include "nontrans/verify.hpp"

using namespace nontrans;

TEST_CASE("the cross-check suite passes on the real implementation") {
    VerifyReport rep = run_verification(6);
    CHECK(rep.ok);
    CHECK(rep.failures.empty());
    CHECK(rep.checks > 100);
}

TEST_CASE("a corrupted recurrence is caught") {
    FComputer corrupted = [](const std::vector<int>& a) {
        LaurentPoly f = compute_F(a);
        if (a == std::vector<int>{2, 1, 0}) return f.shifted(ExponentVec{1, 0, 0});
        return f;
    };
    VerifyReport rep = run_verification(5, corrupted);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.failures.empty());
}

TEST_CASE("a globally skewed enumerator is caught") {
    FComputer skewed = [](const std::vector<int>& a) {
        ExponentVec delta(static_cast<int>(a.size()));
        delta[1] = 1;
        return compute_F(a).shifted(delta);
    };
    VerifyReport rep = run_verification(4, skewed);
    CHECK_FALSE(rep.ok);
}
