#include "nontrans/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace nontrans {

int ExponentVec::check_k(int k) {
    if (k < 1 || k > max_vars)
        throw DomainError("exponent vector: alphabet size must be in [1, " +
                          std::to_string(max_vars) + "], got " + std::to_string(k));
    return k;
}

ExponentVec::ExponentVec(std::initializer_list<int> e)
    : k_(static_cast<std::uint8_t>(check_k(static_cast<int>(e.size())))) {
    int i = 0;
    for (int v : e) e_[static_cast<size_t>(i++)] = v;
}

ExponentVec::ExponentVec(std::span<const int> e)
    : k_(static_cast<std::uint8_t>(check_k(static_cast<int>(e.size())))) {
    for (int i = 0; i < vars(); ++i) e_[static_cast<size_t>(i)] = e[static_cast<size_t>(i)];
}

long long ExponentVec::total_degree() const {
    long long d = 0;
    for (int i = 0; i < vars(); ++i) d += e_[static_cast<size_t>(i)];
    return d;
}

bool ExponentVec::all_strictly_positive() const {
    for (int i = 0; i < vars(); ++i)
        if (e_[static_cast<size_t>(i)] < 1) return false;
    return true;
}

ExponentVec ExponentVec::negated() const {
    ExponentVec r = *this;
    for (int i = 0; i < vars(); ++i) r.e_[static_cast<size_t>(i)] = -r.e_[static_cast<size_t>(i)];
    return r;
}

ExponentVec ExponentVec::rotated(int by) const {
    ExponentVec r(vars());
    for (int i = 0; i < vars(); ++i) {
        int src = i - by;
        src %= vars();
        if (src < 0) src += vars();
        r.e_[static_cast<size_t>(i)] = e_[static_cast<size_t>(src)];
    }
    return r;
}

ExponentVec operator+(const ExponentVec& a, const ExponentVec& b) {
    if (a.vars() != b.vars()) throw DomainError("exponent vector dimension mismatch");
    ExponentVec r = a;
    for (int i = 0; i < a.vars(); ++i) r.e_[static_cast<size_t>(i)] += b.e_[static_cast<size_t>(i)];
    return r;
}

bool operator==(const ExponentVec& a, const ExponentVec& b) {
    if (a.vars() != b.vars()) return false;
    for (int i = 0; i < a.vars(); ++i)
        if (a.e_[static_cast<size_t>(i)] != b.e_[static_cast<size_t>(i)]) return false;
    return true;
}

std::strong_ordering operator<=>(const ExponentVec& a, const ExponentVec& b) {
    if (auto c = a.total_degree() <=> b.total_degree(); c != 0) return c;
    for (int i = 0; i < a.vars(); ++i) {
        if (auto c = a.e_[static_cast<size_t>(i)] <=> b.e_[static_cast<size_t>(i)]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

LaurentPoly LaurentPoly::one(int k) { return monomial(ExponentVec(k), BigInt(1)); }

LaurentPoly LaurentPoly::monomial(const ExponentVec& e, BigInt coeff) {
    LaurentPoly p(e.vars());
    if (coeff != 0) p.terms_.push_back(Term{e, std::move(coeff)});
    return p;
}

LaurentPoly LaurentPoly::from_terms(int k, std::vector<Term> terms) {
    LaurentPoly p(k);
    for (const Term& t : terms)
        if (t.exp.vars() != k) throw DomainError("term dimension mismatch");
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.exp < y.exp; });
    for (Term& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (t.coeff != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.k_ != b.k_)
        throw DomainError("polynomial dimension mismatch: " + std::to_string(a.k_) + " vs " +
                          std::to_string(b.k_));
    LaurentPoly r(a.k_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    while (ia != a.terms_.end() && ib != b.terms_.end()) {
        auto c = ia->exp <=> ib->exp;
        if (c < 0) {
            r.terms_.push_back(*ia++);
        } else if (c > 0) {
            r.terms_.push_back(*ib++);
        } else {
            BigInt s = ia->coeff + ib->coeff;
            if (s != 0) r.terms_.push_back(Term{ia->exp, std::move(s)});
            ++ia, ++ib;
        }
    }
    r.terms_.insert(r.terms_.end(), ia, a.terms_.end());
    r.terms_.insert(r.terms_.end(), ib, b.terms_.end());
    return r;
}

LaurentPoly LaurentPoly::shifted(const ExponentVec& delta, const BigInt& c) const {
    if (delta.vars() != k_) throw DomainError("monomial shift dimension mismatch");
    LaurentPoly r(k_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const Term& t : terms_) r.terms_.push_back(Term{t.exp + delta, t.coeff * c});
    return r;
}

BigInt LaurentPoly::eval_all_ones() const {
    BigInt s = 0;
    for (const Term& t : terms_) s += t.coeff;
    return s;
}

LaurentPoly LaurentPoly::positive_part() const {
    LaurentPoly r(k_);
    for (const Term& t : terms_)
        if (t.exp.all_strictly_positive()) r.terms_.push_back(t);
    return r;
}

BigInt LaurentPoly::power_sum(std::span<const int> order) const {
    if (static_cast<int>(order.size()) != k_) throw DomainError("moment order dimension mismatch");
    for (int o : order)
        if (o < 0) throw DomainError("moment order must be nonnegative");
    BigInt acc = 0;
    for (const Term& t : terms_) {
        BigInt m = t.coeff;
        for (int i = 0; i < k_; ++i) {
            long long e = t.exp[i];
            for (int rep = 0; rep < order[static_cast<size_t>(i)]; ++rep) m *= e;
        }
        acc += m;
    }
    return acc;
}

LaurentPoly LaurentPoly::reciprocal_substitution() const {
    // Negation reverses graded-lex order exactly, so reverse the term list.
    LaurentPoly r(k_);
    r.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        r.terms_.push_back(Term{it->exp.negated(), it->coeff});
    return r;
}

LaurentPoly LaurentPoly::variables_rotated(int by) const {
    std::vector<Term> ts;
    ts.reserve(terms_.size());
    for (const Term& t : terms_) ts.push_back(Term{t.exp.rotated(by), t.coeff});
    return from_terms(k_, std::move(ts));
}

std::string LaurentPoly::serialize() const {
    std::ostringstream os;
    for (const Term& t : terms_) {
        os << t.coeff.str();
        for (int i = 0; i < k_; ++i) os << ' ' << t.exp[i];
        os << '\n';
    }
    return os.str();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.k_ != b.k_ || a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

}  // namespace nontrans
