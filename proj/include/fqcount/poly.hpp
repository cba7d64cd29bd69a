#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fqcount/gf.hpp"

namespace fqcount {

// Dense univariate polynomial over a Field, coefficients ascending.
// Normal form: no stored leading zeros; the zero polynomial stores nothing and its
// degree is reported as std::nullopt (an explicit sentinel, never -1 arithmetic).
class Poly {
public:
    explicit Poly(const Field* f) : f_(f) {}

    static Poly zero(const Field* f) { return Poly(f); }
    static Poly one(const Field* f) { return constant(f->one()); }
    static Poly x(const Field* f) { return monomial(f, 1, f->one()); }
    static Poly constant(Fel c);
    static Poly monomial(const Field* f, int d, Fel c);
    static Poly from_coeffs(const Field* f, std::vector<Fel> coeffs); // ascending

    const Field* field_ptr() const { return f_; }
    const Field& field() const { return *f_; }

    std::optional<int> degree() const {
        if (c_.empty()) return std::nullopt;
        return int(c_.size()) - 1;
    }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Fel leading() const;
    Fel coeff(int j) const { return (j < 0 || j >= (int)c_.size()) ? f_->zero() : c_[j]; }
    const std::vector<Fel>& coeffs() const { return c_; }

    void set_coeff(int j, Fel v); // keeps normal form

    Fel eval(Fel x) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;

private:
    const Field* f_;
    std::vector<Fel> c_;

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

// quotient/remainder with deg(remainder) < deg(divisor); throws on zero divisor
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// monic gcd
Poly gcd(const Poly& a, const Poly& b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& mod);
Poly powmod(const Poly& base, long long e, const Poly& mod);

// f*(x) = x^deg(f) f(1/x); the degree drops when f(0) == 0
Poly reciprocal(const Poly& f);
bool is_self_reciprocal(const Poly& f);

// Deterministic Rabin test: f irreducible iff x^(q^d) == x (mod f) and
// gcd(x^(q^(d/l)) - x, f) = 1 for every prime l | d. No probabilistic shortcuts.
bool is_irreducible(const Poly& f);

std::string poly_str(const Poly& f);
Poly parse_poly(const Field* f, const std::string& text);

// Streams every monic polynomial of degree d whose windows match the given
// constraints, exactly once, in coordinate-lexicographic order (the lowest-degree
// free coefficient varies fastest). leading = (a_1..a_l) prescribes [x^(d-j)] = a_j;
// ending = (b_0..b_(t-1)) prescribes [x^j] = b_j. Requires l + t <= d, and b_0 != 0
// when an ending window is present.
class MonicEnumerator {
public:
    MonicEnumerator(const Field* f, int d,
                    const std::vector<Fel>& leading = {},
                    const std::vector<Fel>& ending = {});

    long long count() const { return count_; }
    // writes the next polynomial into out; returns false when exhausted
    bool next(Poly& out);
    void reset();

private:
    const Field* f_;
    int d_;
    int lo_, hi_; // free coefficient positions are [lo_, hi_)
    std::vector<Fel> base_;
    std::vector<uint16_t> state_;
    bool done_ = false;
    bool fresh_ = true;
    long long count_;
};

} // namespace fqcount
