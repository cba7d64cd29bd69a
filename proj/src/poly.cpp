#include "fqcount/poly.hpp"

#include <algorithm>

namespace fqcount {

namespace {
void check_same(const Poly& a, const Poly& b) {
    if (a.field_ptr() != b.field_ptr())
        throw std::invalid_argument("polynomials over different fields");
}
} // namespace

Poly Poly::constant(Fel c) {
    Poly p(c.field_ptr());
    if (!c.is_zero()) p.c_.push_back(c);
    return p;
}

Poly Poly::monomial(const Field* f, int d, Fel c) {
    Poly p(f);
    if (!c.is_zero()) {
        p.c_.assign(d + 1, f->zero());
        p.c_[d] = c;
    }
    return p;
}

Poly Poly::from_coeffs(const Field* f, std::vector<Fel> coeffs) {
    Poly p(f);
    for (const Fel& c : coeffs)
        if (c.field_ptr() != f) throw std::invalid_argument("coefficient from wrong field");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Fel Poly::leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::set_coeff(int j, Fel v) {
    if (j < 0) throw std::invalid_argument("negative coefficient index");
    if (j >= (int)c_.size()) {
        if (v.is_zero()) return;
        c_.resize(j + 1, f_->zero());
    }
    c_[j] = v;
    trim();
}

Fel Poly::eval(Fel x) const {
    Fel acc = f_->zero();
    for (int j = int(c_.size()) - 1; j >= 0; --j) acc = acc * x + c_[j];
    return acc;
}

Poly Poly::operator+(const Poly& o) const {
    check_same(*this, o);
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(int(i)) + o.coeff(int(i));
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same(*this, o);
    Poly r(f_);
    r.c_.resize(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff(int(i)) - o.coeff(int(i));
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same(*this, o);
    if (is_zero() || o.is_zero()) return Poly(f_);
    Poly r(f_);
    r.c_.assign(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    r.trim();
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field* f = a.field_ptr();
    int db = *b.degree();
    Poly q(f), rem = a;
    if (a.is_zero() || *a.degree() < db) return {q, rem};
    std::vector<Fel> qc(*a.degree() - db + 1, f->zero());
    Fel lead_inv = b.leading().inverse();
    std::vector<Fel> rc = rem.coeffs();
    for (int i = int(rc.size()) - 1; i >= db; --i) {
        if (rc[i].is_zero()) continue;
        Fel factor = rc[i] * lead_inv;
        qc[i - db] = factor;
        for (int j = 0; j <= db; ++j)
            rc[i - db + j] = rc[i - db + j] - factor * b.coeff(j);
    }
    return {Poly::from_coeffs(f, std::move(qc)), Poly::from_coeffs(f, std::move(rc))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    check_same(a, b);
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    // monic normalization
    Fel inv = x.leading().inverse();
    std::vector<Fel> c = x.coeffs();
    for (Fel& e : c) e = e * inv;
    return Poly::from_coeffs(x.field_ptr(), std::move(c));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& mod) { return (a * b) % mod; }

Poly powmod(const Poly& base, long long e, const Poly& mod) {
    if (e < 0) throw std::invalid_argument("negative exponent in powmod");
    Poly acc = Poly::one(base.field_ptr()) % mod;
    Poly b = base % mod;
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, b, mod);
        b = mulmod(b, b, mod);
        e >>= 1;
    }
    return acc;
}

Poly reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("reciprocal of zero polynomial");
    std::vector<Fel> c(f.coeffs());
    std::reverse(c.begin(), c.end());
    return Poly::from_coeffs(f.field_ptr(), std::move(c));
}

bool is_self_reciprocal(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    const auto& c = f.coeffs();
    size_t n = c.size();
    for (size_t i = 0; i < n / 2; ++i)
        if (c[i] != c[n - 1 - i]) return false;
    return true;
}

bool is_irreducible(const Poly& f) {
    if (!f.is_monic() || *f.degree() < 1)
        throw std::invalid_argument("irreducibility test needs a monic non-constant polynomial");
    const Field* F = f.field_ptr();
    int d = *f.degree();
    if (d == 1) return true;

    std::vector<int> milestones; // d/l for prime l | d
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        bool prime = true;
        for (int m = 2; m * m <= l; ++m)
            if (l % m == 0) { prime = false; break; }
        if (prime) milestones.push_back(d / l);
    }

    const Poly X = Poly::x(F) % f;
    Poly h = X;
    for (int j = 1; j <= d; ++j) {
        h = powmod(h, F->q(), f);
        if (std::find(milestones.begin(), milestones.end(), j) != milestones.end()) {
            Poly g = gcd(h - X, f);
            if (g.degree() != 0) return false;
        }
    }
    return h == X;
}

std::string poly_str(const Poly& f) { return f.str(); }

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int j = int(c_.size()) - 1; j >= 0; --j) {
        if (c_[j].is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string cs = c_[j].str();
        bool composite = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
        if (j == 0) {
            s += composite ? "(" + cs + ")" : cs;
        } else {
            if (!c_[j].is_one()) s += (composite ? "(" + cs + ")" : cs) + "*";
            s += (j == 1) ? "x" : "x^" + std::to_string(j);
        }
    }
    return s;
}

Poly parse_poly(const Field* f, const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    if (s.empty()) throw std::invalid_argument("empty polynomial literal");

    if (s.find(',') != std::string::npos) {
        // ascending coefficient list
        std::vector<Fel> coeffs;
        std::string item;
        for (size_t i = 0; i <= s.size(); ++i) {
            if (i == s.size() || s[i] == ',') {
                coeffs.push_back(f->parse_element(item));
                item.clear();
            } else {
                item += s[i];
            }
        }
        return Poly::from_coeffs(f, std::move(coeffs));
    }

    // sum of terms, split on '+' outside parentheses
    std::vector<std::string> terms;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);

    Poly result(f);
    for (const std::string& term : terms) {
        if (term.empty()) throw std::invalid_argument("bad polynomial literal: " + text);
        size_t xpos = term.find('x');
        // parenthesized coefficients may not contain 'x'; safe to search directly
        if (xpos == std::string::npos) {
            result = result + Poly::constant(f->parse_element(
                                  term.front() == '(' ? term.substr(1, term.size() - 2) : term));
            continue;
        }
        std::string coefpart = term.substr(0, xpos);
        if (!coefpart.empty()) {
            if (coefpart.back() != '*') throw std::invalid_argument("bad polynomial term: " + term);
            coefpart.pop_back();
            if (!coefpart.empty() && coefpart.front() == '(')
                coefpart = coefpart.substr(1, coefpart.size() - 2);
        }
        Fel coef = coefpart.empty() ? f->one() : f->parse_element(coefpart);
        std::string epart = term.substr(xpos + 1);
        int deg = 1;
        if (!epart.empty()) {
            if (epart[0] != '^') throw std::invalid_argument("bad polynomial term: " + term);
            deg = std::stoi(epart.substr(1));
        }
        result = result + Poly::monomial(f, deg, coef);
    }
    return result;
}

MonicEnumerator::MonicEnumerator(const Field* f, int d, const std::vector<Fel>& leading,
                                 const std::vector<Fel>& ending)
    : f_(f), d_(d) {
    int ell = int(leading.size()), t = int(ending.size());
    if (d < 1) throw std::invalid_argument("enumeration degree must be >= 1");
    if (ell + t > d)
        throw std::invalid_argument("window lengths exceed degree (l+t > d)");
    if (t >= 1 && ending[0].is_zero())
        throw std::invalid_argument("ending window must have b_0 != 0");

    base_.assign(d + 1, f->zero());
    base_[d] = f->one();
    for (int j = 1; j <= ell; ++j) {
        if (leading[j - 1].field_ptr() != f) throw std::invalid_argument("window element from wrong field");
        base_[d - j] = leading[j - 1];
    }
    for (int j = 0; j < t; ++j) {
        if (ending[j].field_ptr() != f) throw std::invalid_argument("window element from wrong field");
        base_[j] = ending[j];
    }
    lo_ = t;
    hi_ = d - ell;
    count_ = 1;
    for (int i = lo_; i < hi_; ++i) count_ *= f->q();
    reset();
}

void MonicEnumerator::reset() {
    state_.assign(size_t(std::max(0, hi_ - lo_)), 0);
    done_ = false;
    fresh_ = true;
}

bool MonicEnumerator::next(Poly& out) {
    if (done_) return false;
    if (!fresh_) {
        // odometer: lowest-degree free coefficient varies fastest
        size_t i = 0;
        for (; i < state_.size(); ++i) {
            if (++state_[i] < f_->q()) break;
            state_[i] = 0;
        }
        if (i == state_.size()) {
            done_ = true;
            return false;
        }
    }
    fresh_ = false;
    std::vector<Fel> c = base_;
    for (size_t i = 0; i < state_.size(); ++i) c[lo_ + int(i)] = f_->from_index(state_[i]);
    out = Poly::from_coeffs(f_, std::move(c));
    return true;
}

} // namespace fqcount
