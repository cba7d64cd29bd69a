#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fqcount/errors.hpp"

namespace fqcount {

class Field;
using FieldRef = std::shared_ptr<const Field>;

// Element of a finite field F_q. A value is the pair (field, index), where the index
// is the element's position in the field's fixed enumeration order: coordinates in the
// polynomial basis, lowest-degree coordinate most significant. Elements are immutable.
class Fel {
public:
    Fel() : f_(nullptr), i_(0) {}
    Fel(const Field* f, uint16_t i) : f_(f), i_(i) {}

    bool valid() const { return f_ != nullptr; }
    uint16_t index() const { return i_; }
    const Field& field() const;
    const Field* field_ptr() const { return f_; }

    bool is_zero() const { return i_ == 0; }
    bool is_one() const;

    Fel operator+(Fel o) const;
    Fel operator-(Fel o) const;
    Fel operator*(Fel o) const;
    Fel operator/(Fel o) const;
    Fel operator-() const;
    Fel inverse() const;
    Fel pow(long long e) const;

    bool operator==(Fel o) const { return f_ == o.f_ && i_ == o.i_; }
    bool operator!=(Fel o) const { return !(*this == o); }
    // enumeration order
    bool operator<(Fel o) const { return i_ < o.i_; }

    std::vector<int> coords() const;
    std::string str() const;

private:
    const Field* f_;
    uint16_t i_;
};

// A finite field F_q, q = p^r, with table-based arithmetic and a fixed primitive
// element gamma. Immutable after construction; safe to share across threads.
//
// For r > 1 the field is F_p[t]/(modulus). Built-in moduli exist for
// q in {4, 8, 9, 16, 25, 27}; any user-supplied monic irreducible of degree r
// is accepted (irreducibility is verified at construction).
class Field {
public:
    // modulus: coefficient list over F_p, ascending, length r+1, monic. Optional for r == 1.
    // generator: optional coordinates of a primitive element to use as gamma instead of the
    // default (the least element of multiplicative order q-1); verified at construction.
    static FieldRef make(long long p, int r = 1,
                         const std::optional<std::vector<int>>& modulus = std::nullopt,
                         const std::optional<std::vector<int>>& generator = std::nullopt);

    long long p() const { return p_; }
    int r() const { return r_; }
    long long q() const { return q_; }
    // modulus coefficients (ascending, length r+1); empty for prime fields
    const std::vector<int>& modulus() const { return modulus_; }

    Fel zero() const { return Fel(this, 0); }
    Fel one() const { return one_; }
    Fel gamma() const { return gamma_; }

    Fel from_index(long long i) const;
    Fel from_coords(const std::vector<int>& c) const;
    // image of an integer under Z -> F_p -> F_q
    Fel from_int(long long n) const;

    Fel add(Fel a, Fel b) const { return Fel(this, add_[size_t(a.index()) * q_ + b.index()]); }
    Fel mul(Fel a, Fel b) const { return Fel(this, mul_[size_t(a.index()) * q_ + b.index()]); }
    Fel neg(Fel a) const { return Fel(this, neg_[a.index()]); }
    Fel inv(Fel a) const;
    Fel pow(Fel a, long long e) const;

    // discrete log base gamma; requires a != 0
    long long dlog(Fel a) const;
    long long element_order(Fel a) const;

    std::vector<int> coords_of(Fel a) const;
    std::string element_str(Fel a) const;
    Fel parse_element(const std::string& text) const;

    std::string str() const; // "F_9 = F_3[t]/(t^2+1)"

private:
    Field() = default;

    long long p_ = 0, q_ = 0;
    int r_ = 1;
    std::vector<int> modulus_;          // ascending, empty for r == 1
    std::vector<uint16_t> add_, mul_;   // q x q tables
    std::vector<uint16_t> neg_, inv_;   // size q (inv_[0] unused)
    std::vector<long long> log_;        // dlog base gamma, size q (log_[0] unused)
    Fel one_, gamma_;
};

inline const Field& Fel::field() const {
    if (!f_) throw std::invalid_argument("uninitialized field element");
    return *f_;
}

inline bool Fel::is_one() const { return f_ && *this == f_->one(); }
inline Fel Fel::operator-() const { return field().neg(*this); }
inline Fel Fel::inverse() const { return field().inv(*this); }
inline Fel Fel::pow(long long e) const { return field().pow(*this, e); }
inline std::vector<int> Fel::coords() const { return field().coords_of(*this); }
inline std::string Fel::str() const { return field().element_str(*this); }

namespace detail {
inline void check_same_field(Fel a, Fel b) {
    if (a.field_ptr() == nullptr || a.field_ptr() != b.field_ptr())
        throw std::invalid_argument("operands from different fields");
}
} // namespace detail

inline Fel Fel::operator+(Fel o) const { detail::check_same_field(*this, o); return f_->add(*this, o); }
inline Fel Fel::operator-(Fel o) const { detail::check_same_field(*this, o); return f_->add(*this, f_->neg(o)); }
inline Fel Fel::operator*(Fel o) const { detail::check_same_field(*this, o); return f_->mul(*this, o); }
inline Fel Fel::operator/(Fel o) const { detail::check_same_field(*this, o); return f_->mul(*this, f_->inv(o)); }

bool is_prime(long long n);

} // namespace fqcount
