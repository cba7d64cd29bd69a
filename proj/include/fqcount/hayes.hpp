#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "fqcount/poly.hpp"

namespace fqcount {

// An equivalence class <f> of monic polynomials with respect to (l, t): the l leading
// coefficients below the leading 1 and the t ending coefficients. When t >= 1 the norm
// b_0 is nonzero. Two classes are equal iff all window entries agree.
struct HayesClass {
    const Field* field = nullptr;
    int ell = 0, t = 0;
    std::vector<Fel> leading; // a_1..a_ell, a_j = [x^(deg-j)] of a high-degree representative
    std::vector<Fel> ending;  // b_0..b_(t-1)

    bool operator==(const HayesClass& o) const {
        return field == o.field && ell == o.ell && t == o.t && leading == o.leading &&
               ending == o.ending;
    }
    bool operator!=(const HayesClass& o) const { return !(*this == o); }

    bool is_identity() const;
    std::vector<uint16_t> key() const;
    std::string str() const; // "a=(1,0);b=(1)"
};

// canonical class of a monic polynomial; low-degree representatives are lifted by
// x^(l+t+1) (t = 0) or x^(l+t+1)+1 (t >= 1), whose classes are the identity
HayesClass class_of(const Poly& f, int ell, int t);
HayesClass class_identity(const Field* f, int ell, int t);
// a monic representative of degree l+t+1
Poly class_representative(const HayesClass& c);

HayesClass class_mul(const HayesClass& a, const HayesClass& b);
HayesClass class_pow(const HayesClass& a, long long e);
HayesClass class_inv(const HayesClass& a);
long long class_element_order(const HayesClass& a);

// |E^(l,t)| = (q - [t>0]) q^(l+t-1), and 1 when l = t = 0
long long class_group_order(const Field& f, int ell, int t);

HayesClass parse_class(const Field* f, int ell, int t, const std::string& text);

class GroupStructure;
using GroupRef = std::shared_ptr<const GroupStructure>;

// The abelian group E^(l,t) decomposed into cyclic factors with a fixed generator list
// and a total discrete-log map. For t = 0 the factors are principal-unit classes
// <x^j+c> (Lemma-5 generators for prime q; an independent basis reduced from
// {<x^j+c> : c in an F_p-basis, p does not divide j} otherwise). For t >= 1 the group
// is assembled through E^(l,t) ~ E^l x E^(t-1) x F_q^*, gamma component first.
class GroupStructure {
public:
    struct Options {
        long long budget = 1 << 20;
        bool reverse_generators = false; // test hook: permuted generator order (t = 0 only)
        bool force_generic_basis = false; // test hook: generic reduction even for prime q
    };

    static GroupRef build(FieldRef field, int ell, int t, const Options& opt = Options{});

    const Field& field() const { return *field_; }
    FieldRef field_ref() const { return field_; }
    int ell() const { return ell_; }
    int t() const { return t_; }
    long long size() const { return size_; }

    const std::vector<HayesClass>& generators() const { return gens_; }
    const std::vector<long long>& orders() const { return orders_; }

    HayesClass identity() const { return class_identity(field_.get(), ell_, t_); }
    bool contains(const HayesClass& c) const {
        return c.field == field_.get() && c.ell == ell_ && c.t == t_;
    }

    // exponent vector of a class in the fixed decomposition
    std::vector<long long> dlog(const HayesClass& c) const;
    HayesClass from_exponents(const std::vector<long long>& e) const;

    // deterministic enumeration: mixed-radix rank of the exponent vector,
    // first component most significant; rank 0 is the identity
    long long rank(const HayesClass& c) const;
    HayesClass at_rank(long long idx) const;

    // {eps^(1/k)} = {delta : delta^k = eps}
    std::vector<HayesClass> kth_roots(const HayesClass& eps, long long k) const;
    long long kth_root_count(const HayesClass& eps, long long k) const;
    long long unit_root_count(long long k) const; // |{<1>^(1/k)}| = prod gcd(k, r_h)

    // E^(l,t) ~ E^l x E^(t-1) x F_q^*, written eps = (eps1, gamma^n, eps2); t >= 1 only
    struct Split {
        HayesClass eps1;
        long long n;
        HayesClass eps2;
    };
    Split split(const HayesClass& eps) const;
    HayesClass compose(const HayesClass& eps1, long long n, const HayesClass& eps2) const;

    // the E^l factor (this group itself when t = 0) and the E^(t-1) factor
    const GroupStructure& leading_part() const { return t_ == 0 ? *this : *lead_; }
    const GroupStructure& ending_part() const;

private:
    GroupStructure() = default;

    FieldRef field_;
    int ell_ = 0, t_ = 0;
    long long size_ = 1;
    std::vector<HayesClass> gens_;
    std::vector<long long> orders_;
    std::map<std::vector<uint16_t>, std::vector<long long>> table_; // t = 0: window -> evec
    GroupRef lead_, end_;                                           // t >= 1 factors

    static GroupRef build_line(FieldRef field, int m, const Options& opt);
};

} // namespace fqcount
