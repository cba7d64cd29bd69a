#pragma once

#include <cstdint>
#include <string>

#include "fqcount/errors.hpp"

namespace fqcount {

using int128 = __int128;

// Exact rational with 128-bit numerator/denominator. Large enough for every
// quantity handled here (q^d <= 5^10 on the counting grids, bound coefficients
// with denominator <= 10^9 from directed rounding, and one squaring on top).
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

    static Rat of(long long n, long long d) { return Rat(int128(n), int128(d)); }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_integer() const { return den_ == 1; }

    Rat operator-() const { return Rat(-num_, den_); }
    Rat operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Rat operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("rational division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return o <= *this; }

    double to_double() const { return double(num_) / double(den_); }

    std::string str() const {
        std::string s = int128_str(num_);
        if (den_ != 1) s += "/" + int128_str(den_);
        return s;
    }

    static std::string int128_str(int128 v) {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        std::string s;
        while (u > 0) {
            s.insert(s.begin(), char('0' + int(u % 10)));
            u /= 10;
        }
        return neg ? "-" + s : s;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        int128 g = gcd128(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static int128 gcd128(int128 a, int128 b) {
        while (b != 0) { int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    int128 num_, den_;
};

inline long long ipow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > (long long)4e17 / (b > 0 ? b : 1)) throw ExactnessError("integer power overflow");
        r *= b;
    }
    return r;
}

} // namespace fqcount
