#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nontrans/laurent.hpp"

using namespace nontrans;

namespace {

LaurentPoly poly3(std::vector<Term> ts) { return LaurentPoly::from_terms(3, std::move(ts)); }

}  // namespace

TEST_CASE("exponent vectors order graded-lexicographically") {
    ExponentVec a{0, 0, 0}, b{1, -1, 0}, c{0, 1, 0}, d{1, 1, -1};
    CHECK(a.total_degree() == 0);
    CHECK(b.total_degree() == 0);
    CHECK(c.total_degree() == 1);
    CHECK(a < c);  // lower degree first
    CHECK(b < c);  // degree 0 before degree 1
    CHECK(a < b);  // same degree, lex: (0,0,0) < (1,-1,0)
    CHECK(c < d);  // same degree, lex: (0,1,0) < (1,1,-1)
    CHECK(ExponentVec{1, 1, 1}.all_strictly_positive());
    CHECK_FALSE(ExponentVec{1, 0, 2}.all_strictly_positive());
    CHECK(ExponentVec{1, -2, 3}.negated() == ExponentVec{-1, 2, -3});
    CHECK(ExponentVec{1, 2, 3}.rotated(1) == ExponentVec{3, 1, 2});
}

TEST_CASE("addition merges and cancels") {
    LaurentPoly p = poly3({{ExponentVec{1, 0, 0}, 1}, {ExponentVec{-1, 0, 0}, 1}});
    LaurentPoly q = poly3({{ExponentVec{-1, 0, 0}, -1}});
    CHECK(p + q == poly3({{ExponentVec{1, 0, 0}, 1}}));
    CHECK(p + LaurentPoly(3) == p);
    CHECK((p + q.shifted(ExponentVec{0, 0, 0}, -1)).term_count() == 2);
}

TEST_CASE("monomial shift") {
    CHECK(LaurentPoly::one(3).shifted(ExponentVec{1, 0, -1}) ==
          poly3({{ExponentVec{1, 0, -1}, 1}}));
    LaurentPoly p = poly3({{ExponentVec{1, 0, 0}, 1}, {ExponentVec{-1, 0, 0}, 1}});
    CHECK(p.shifted(ExponentVec{-1, 0, 0}) ==
          poly3({{ExponentVec{0, 0, 0}, 1}, {ExponentVec{-2, 0, 0}, 1}}));
    CHECK(p.shifted(ExponentVec{0, 0, 0}) == p);
    CHECK(p.shifted(ExponentVec{0, 0, 0}, 0).is_zero());
}

TEST_CASE("positive part keeps all-strictly-positive terms") {
    LaurentPoly p = poly3({{ExponentVec{-1, 3, 5}, 5},
                           {ExponentVec{2, -3, 5}, 4},
                           {ExponentVec{1, 1, 2}, 7},
                           {ExponentVec{2, 0, 3}, 11},
                           {ExponentVec{1, 1, 1}, 2}});
    LaurentPoly pos = p.positive_part();
    CHECK(pos == poly3({{ExponentVec{1, 1, 2}, 7}, {ExponentVec{1, 1, 1}, 2}}));
    CHECK(pos.positive_part() == pos);
    CHECK(pos.eval_all_ones() == 9);
    CHECK(pos.eval_all_ones() <= p.eval_all_ones());
    CHECK(poly3({{ExponentVec{1, 1, 1}, 1}}).positive_part().term_count() == 1);
    CHECK(poly3({{ExponentVec{1, 1, 0}, 1}}).positive_part().is_zero());
}

TEST_CASE("evaluation at all ones") {
    CHECK(LaurentPoly(3).eval_all_ones() == 0);
    LaurentPoly p = poly3({{ExponentVec{2, -1, 0}, 3}, {ExponentVec{0, 0, 0}, 4}});
    CHECK(p.eval_all_ones() == 7);
}

TEST_CASE("power sums with zero-power convention") {
    LaurentPoly p = poly3({{ExponentVec{1, 0, 0}, 1}, {ExponentVec{-1, 0, 0}, 1}});
    std::vector<int> sq{2, 0, 0}, none{0, 0, 0}, odd{1, 0, 0};
    CHECK(p.power_sum(sq) == 2);
    CHECK(p.power_sum(none) == p.eval_all_ones());
    CHECK(p.power_sum(odd) == 0);
}

TEST_CASE("reciprocal substitution is an involution") {
    LaurentPoly p = poly3({{ExponentVec{2, -1, 0}, 3},
                           {ExponentVec{0, 1, -3}, 7},
                           {ExponentVec{0, 0, 0}, 1}});
    LaurentPoly r = p.reciprocal_substitution();
    CHECK(r.term_count() == p.term_count());
    CHECK(r.reciprocal_substitution() == p);
    CHECK(r.eval_all_ones() == p.eval_all_ones());
}

TEST_CASE("variable rotation cycles back to identity") {
    LaurentPoly p = poly3({{ExponentVec{2, -1, 0}, 3}, {ExponentVec{0, 1, -3}, 7}});
    CHECK(p.variables_rotated(1).variables_rotated(1).variables_rotated(1) == p);
    CHECK(p.variables_rotated(0) == p);
    CHECK(p.variables_rotated(3) == p);
}

TEST_CASE("from_terms combines duplicates and drops zeros") {
    LaurentPoly p = poly3({{ExponentVec{1, 0, 0}, 2},
                           {ExponentVec{1, 0, 0}, -2},
                           {ExponentVec{0, 1, 0}, 5}});
    CHECK(p == poly3({{ExponentVec{0, 1, 0}, 5}}));
}

TEST_CASE("serialization is graded-lex and byte-stable") {
    LaurentPoly p = poly3({{ExponentVec{1, 1, 2}, 7}, {ExponentVec{1, 1, 1}, 2}});
    CHECK(p.serialize() == "2 1 1 1\n7 1 1 2\n");
    CHECK(LaurentPoly(3).serialize() == "");
}
