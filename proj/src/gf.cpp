#include "fqcount/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace fqcount {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

constexpr long long kMaxFieldSize = 1024; // table-based arithmetic only

// Built-in moduli (ascending coefficients) for the small extension fields used at desk scale.
const std::map<long long, std::vector<int>>& default_moduli() {
    static const std::map<long long, std::vector<int>> table = {
        {4, {1, 1, 1}},        // t^2+t+1 over F_2
        {8, {1, 1, 0, 1}},     // t^3+t+1 over F_2
        {9, {1, 0, 1}},        // t^2+1 over F_3
        {16, {1, 1, 0, 0, 1}}, // t^4+t+1 over F_2
        {25, {1, 1, 1}},       // t^2+t+1 over F_5
        {27, {1, 2, 0, 1}},    // t^3+2t+1 over F_3
    };
    return table;
}

// Minimal polynomial arithmetic over F_p on plain int vectors (ascending coefficients),
// used only to validate moduli before the field's own machinery exists.
std::vector<int> ptrim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> pmod(std::vector<int> a, const std::vector<int>& m, long long p) {
    a = ptrim(std::move(a));
    while (a.size() >= m.size()) {
        // m is monic
        int lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            long long v = a[shift + i] - (long long)lead * m[i];
            a[shift + i] = int(((v % p) + p) % p);
        }
        a = ptrim(std::move(a));
    }
    return a;
}

std::vector<int> pmulmod(const std::vector<int>& a, const std::vector<int>& b,
                         const std::vector<int>& m, long long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = int((c[i + j] + (long long)a[i] * b[j]) % p);
    return pmod(std::move(c), m, p);
}

bool modulus_irreducible(const std::vector<int>& m, long long p) {
    int r = int(m.size()) - 1;
    if (r == 1) return true;
    // trial division by every monic polynomial of degree 1..r/2
    for (int d = 1; 2 * d <= r; ++d) {
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long idx = 0; idx < count; ++idx) {
            std::vector<int> g(d + 1, 0);
            long long v = idx;
            for (int i = 0; i < d; ++i) { g[i] = int(v % p); v /= p; }
            g[d] = 1;
            if (pmod(m, g, p).empty()) return false;
        }
    }
    return true;
}

} // namespace

FieldRef Field::make(long long p, int r, const std::optional<std::vector<int>>& modulus,
                     const std::optional<std::vector<int>>& generator) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");

    long long q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxFieldSize) throw std::invalid_argument("field size exceeds supported table range");
    }

    std::vector<int> mod;
    if (r > 1) {
        if (modulus) {
            mod = *modulus;
            if ((int)mod.size() != r + 1 || mod.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree r");
            for (int& c : mod) c = int(((c % p) + p) % p);
            if (!modulus_irreducible(mod, p))
                throw std::invalid_argument("modulus is reducible over F_p");
        } else {
            auto it = default_moduli().find(q);
            if (it == default_moduli().end())
                throw std::invalid_argument("no built-in modulus for q=" + std::to_string(q) +
                                            "; supply one explicitly");
            mod = it->second;
        }
    } else if (modulus) {
        throw std::invalid_argument("prime fields take no modulus");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->r_ = r;
    f->q_ = q;
    f->modulus_ = mod;

    // index <-> coordinates: idx = sum c_j * p^(r-1-j), c_0 most significant
    auto coords_from_index = [&](long long idx) {
        std::vector<int> c(r);
        for (int j = r - 1; j >= 0; --j) { c[j] = int(idx % p); idx /= p; }
        return c;
    };
    auto index_from_coords = [&](const std::vector<int>& c) {
        long long idx = 0;
        for (int j = 0; j < r; ++j) idx = idx * p + c[j];
        return idx;
    };

    f->add_.resize(size_t(q) * q);
    f->mul_.resize(size_t(q) * q);
    f->neg_.resize(q);
    std::vector<std::vector<int>> cs(q);
    for (long long i = 0; i < q; ++i) cs[i] = coords_from_index(i);

    for (long long i = 0; i < q; ++i) {
        std::vector<int> nc(r);
        for (int j = 0; j < r; ++j) nc[j] = int((p - cs[i][j]) % p);
        f->neg_[i] = uint16_t(index_from_coords(nc));
        for (long long k = 0; k < q; ++k) {
            std::vector<int> sc(r);
            for (int j = 0; j < r; ++j) sc[j] = int((cs[i][j] + cs[k][j]) % p);
            f->add_[size_t(i) * q + k] = uint16_t(index_from_coords(sc));
            if (r == 1) {
                f->mul_[size_t(i) * q + k] = uint16_t((i * k) % p);
            } else {
                auto prod = pmulmod(ptrim(cs[i]), ptrim(cs[k]), mod, p);
                prod.resize(r, 0);
                f->mul_[size_t(i) * q + k] = uint16_t(index_from_coords(prod));
            }
        }
    }

    std::vector<int> onec(r, 0);
    onec[0] = 1;
    f->one_ = Fel(f.get(), uint16_t(index_from_coords(onec)));

    f->inv_.assign(q, 0);
    for (long long i = 1; i < q; ++i)
        for (long long k = 1; k < q; ++k)
            if (f->mul_[size_t(i) * q + k] == f->one_.index()) { f->inv_[i] = uint16_t(k); break; }

    auto order_of = [&](long long i) {
        long long ord = 1, cur = i;
        while (cur != f->one_.index()) { cur = f->mul_[size_t(cur) * q + i]; ++ord; }
        return ord;
    };

    long long g = -1;
    if (generator) {
        if ((int)generator->size() != r) throw std::invalid_argument("generator coordinate count != r");
        std::vector<int> gc(*generator);
        for (int& c : gc) c = int(((c % p) + p) % p);
        g = index_from_coords(gc);
        if (g == 0 || order_of(g) != q - 1)
            throw std::invalid_argument("supplied generator does not have order q-1");
    } else {
        for (long long i = 1; i < q; ++i)
            if (order_of(i) == q - 1) { g = i; break; }
    }
    f->gamma_ = Fel(f.get(), uint16_t(g));

    f->log_.assign(q, 0);
    long long cur = f->one_.index();
    for (long long e = 0; e < q - 1; ++e) {
        f->log_[cur] = e;
        cur = f->mul_[size_t(cur) * q + g];
    }

    return f;
}

Fel Field::from_index(long long i) const {
    if (i < 0 || i >= q_) throw std::invalid_argument("element index out of range");
    return Fel(this, uint16_t(i));
}

Fel Field::from_coords(const std::vector<int>& c) const {
    if ((int)c.size() > r_) throw std::invalid_argument("too many coordinates");
    long long idx = 0;
    for (int j = 0; j < r_; ++j) {
        int cj = j < (int)c.size() ? int(((c[j] % p_) + p_) % p_) : 0;
        idx = idx * p_ + cj;
    }
    return Fel(this, uint16_t(idx));
}

Fel Field::from_int(long long n) const {
    std::vector<int> c(r_, 0);
    c[0] = int(((n % p_) + p_) % p_);
    return from_coords(c);
}

Fel Field::inv(Fel a) const {
    if (a.is_zero()) throw std::domain_error("division by zero in F_q");
    return Fel(this, inv_[a.index()]);
}

Fel Field::pow(Fel a, long long e) const {
    if (e < 0) {
        if (a.is_zero()) throw std::domain_error("division by zero in F_q");
        a = inv(a);
        e = -e;
    }
    if (a.is_zero()) return e == 0 ? one() : zero();
    e %= (q_ - 1);
    Fel acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

long long Field::dlog(Fel a) const {
    if (a.is_zero()) throw std::domain_error("discrete log of zero");
    return log_[a.index()];
}

long long Field::element_order(Fel a) const {
    if (a.is_zero()) throw std::domain_error("multiplicative order of zero");
    long long e = dlog(a);
    long long n = q_ - 1;
    long long g = std::gcd(e == 0 ? n : e, n);
    return n / g;
}

std::vector<int> Field::coords_of(Fel a) const {
    long long idx = a.index();
    std::vector<int> c(r_);
    for (int j = r_ - 1; j >= 0; --j) { c[j] = int(idx % p_); idx /= p_; }
    return c;
}

std::string Field::element_str(Fel a) const {
    auto c = coords_of(a);
    if (r_ == 1) return std::to_string(c[0]);
    std::string s;
    for (int j = 0; j < r_; ++j) {
        if (c[j] == 0) continue;
        if (!s.empty()) s += "+";
        if (j == 0) {
            s += std::to_string(c[j]);
        } else {
            if (c[j] != 1) s += std::to_string(c[j]) + "*";
            s += (j == 1) ? "t" : "t^" + std::to_string(j);
        }
    }
    return s.empty() ? "0" : s;
}

Fel Field::parse_element(const std::string& text) const {
    std::vector<int> c(r_, 0);
    std::string term;
    auto flush = [&](const std::string& t) {
        if (t.empty()) throw std::invalid_argument("bad element literal: " + text);
        size_t star = t.find('*');
        std::string coef = star == std::string::npos ? "" : t.substr(0, star);
        std::string rest = star == std::string::npos ? t : t.substr(star + 1);
        int deg, val;
        if (rest.empty() || rest[0] != 't') {
            // pure number
            deg = 0;
            val = std::stoi(t);
        } else {
            deg = rest.size() > 1 ? (rest[1] == '^' ? std::stoi(rest.substr(2)) : throw std::invalid_argument("bad element literal: " + text)) : 1;
            val = coef.empty() ? 1 : std::stoi(coef);
        }
        if (deg >= r_) throw std::invalid_argument("element term degree >= r in: " + text);
        c[deg] = int(((c[deg] + val) % p_ + p_) % p_);
    };
    for (char ch : text) {
        if (ch == ' ') continue;
        if (ch == '+') { flush(term); term.clear(); }
        else term += ch;
    }
    flush(term);
    return from_coords(c);
}

std::string Field::str() const {
    if (r_ == 1) return "F_" + std::to_string(q_);
    std::string m;
    for (int j = r_; j >= 0; --j) {
        if (modulus_[j] == 0) continue;
        if (!m.empty()) m += "+";
        if (j == 0) m += std::to_string(modulus_[j]);
        else {
            if (modulus_[j] != 1) m += std::to_string(modulus_[j]) + "*";
            m += (j == 1) ? "t" : "t^" + std::to_string(j);
        }
    }
    return "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[t]/(" + m + ")";
}

} // namespace fqcount
