#include "fqcount/hayes.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "fqcount/errors.hpp"

namespace fqcount {

bool HayesClass::is_identity() const {
    for (const Fel& a : leading)
        if (!a.is_zero()) return false;
    if (t >= 1) {
        if (!ending[0].is_one()) return false;
        for (int j = 1; j < t; ++j)
            if (!ending[j].is_zero()) return false;
    }
    return true;
}

std::vector<uint16_t> HayesClass::key() const {
    std::vector<uint16_t> k;
    k.reserve(leading.size() + ending.size());
    for (const Fel& a : leading) k.push_back(a.index());
    for (const Fel& b : ending) k.push_back(b.index());
    return k;
}

std::string HayesClass::str() const {
    std::string s = "a=(";
    for (int j = 0; j < ell; ++j) s += (j ? "," : "") + leading[j].str();
    s += ");b=(";
    for (int j = 0; j < t; ++j) s += (j ? "," : "") + ending[j].str();
    return s + ")";
}

HayesClass class_identity(const Field* f, int ell, int t) {
    HayesClass c;
    c.field = f;
    c.ell = ell;
    c.t = t;
    c.leading.assign(ell, f->zero());
    if (t >= 1) {
        c.ending.assign(t, f->zero());
        c.ending[0] = f->one();
    }
    return c;
}

HayesClass class_of(const Poly& f, int ell, int t) {
    if (!f.is_monic()) throw std::invalid_argument("class of a non-monic polynomial");
    const Field* F = f.field_ptr();
    if (t >= 1 && f.coeff(0).is_zero())
        throw std::invalid_argument("class with t >= 1 needs a nonzero constant term");

    Poly g = f;
    if (*f.degree() < ell + t) {
        int N = ell + t + 1;
        Poly lifter = Poly::monomial(F, N, F->one());
        if (t >= 1) lifter = lifter + Poly::one(F);
        g = f * lifter;
    }
    int d = *g.degree();
    HayesClass c;
    c.field = F;
    c.ell = ell;
    c.t = t;
    c.leading.reserve(ell);
    for (int j = 1; j <= ell; ++j) c.leading.push_back(g.coeff(d - j));
    c.ending.reserve(t);
    for (int j = 0; j < t; ++j) c.ending.push_back(g.coeff(j));
    return c;
}

Poly class_representative(const HayesClass& c) {
    const Field* F = c.field;
    int D = c.ell + c.t + 1;
    std::vector<Fel> coef(D + 1, F->zero());
    coef[D] = F->one();
    for (int j = 1; j <= c.ell; ++j) coef[D - j] = c.leading[j - 1];
    for (int j = 0; j < c.t; ++j) coef[j] = c.ending[j];
    return Poly::from_coeffs(F, std::move(coef));
}

namespace {
void check_compatible(const HayesClass& a, const HayesClass& b) {
    if (a.field != b.field || a.ell != b.ell || a.t != b.t)
        throw std::invalid_argument("classes from different groups");
}
} // namespace

HayesClass class_mul(const HayesClass& a, const HayesClass& b) {
    check_compatible(a, b);
    return class_of(class_representative(a) * class_representative(b), a.ell, a.t);
}

HayesClass class_pow(const HayesClass& a, long long e) {
    if (e < 0) return class_pow(class_inv(a), -e);
    HayesClass acc = class_identity(a.field, a.ell, a.t);
    HayesClass base = a;
    while (e > 0) {
        if (e & 1) acc = class_mul(acc, base);
        if (e >>= 1) base = class_mul(base, base);
    }
    return acc;
}

long long class_group_order(const Field& f, int ell, int t) {
    if (ell + t == 0) return 1;
    long long n = (t > 0) ? f.q() - 1 : f.q();
    for (int i = 1; i < ell + t; ++i) n *= f.q();
    return n;
}

long long class_element_order(const HayesClass& a) {
    long long n = class_group_order(*a.field, a.ell, a.t);
    HayesClass id = class_identity(a.field, a.ell, a.t);
    long long ord = n;
    long long m = n;
    for (long long pf = 2; pf * pf <= m; ++pf) {
        if (m % pf) continue;
        while (m % pf == 0) m /= pf;
        while (ord % pf == 0 && class_pow(a, ord / pf) == id) ord /= pf;
    }
    if (m > 1)
        while (ord % m == 0 && class_pow(a, ord / m) == id) ord /= m;
    return ord;
}

HayesClass class_inv(const HayesClass& a) {
    long long ord = class_element_order(a);
    return class_pow(a, ord - 1);
}

HayesClass parse_class(const Field* f, int ell, int t, const std::string& text) {
    HayesClass c = class_identity(f, ell, t);
    auto read_window = [&](const std::string& body, std::vector<Fel>& out, size_t expect) {
        std::vector<Fel> items;
        std::string item;
        for (size_t i = 0; i <= body.size(); ++i) {
            if (i == body.size() || body[i] == ',') {
                if (!item.empty()) items.push_back(f->parse_element(item));
                item.clear();
            } else if (body[i] != ' ') {
                item += body[i];
            }
        }
        if (items.size() != expect)
            throw std::invalid_argument("window length mismatch in class literal: " + text);
        out = std::move(items);
    };
    bool saw_a = false, saw_b = (t == 0);
    std::string s;
    for (char ch : text)
        if (ch != ' ') s += ch;
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] == ';') { ++pos; continue; }
        if (pos + 2 >= s.size() || s[pos + 1] != '=' || s[pos + 2] != '(')
            throw std::invalid_argument("bad class literal: " + text);
        char which = s[pos];
        size_t close = s.find(')', pos);
        if (close == std::string::npos) throw std::invalid_argument("bad class literal: " + text);
        std::string body = s.substr(pos + 3, close - pos - 3);
        if (which == 'a') { read_window(body, c.leading, ell); saw_a = true; }
        else if (which == 'b') { read_window(body, c.ending, t); saw_b = true; }
        else throw std::invalid_argument("bad class literal: " + text);
        pos = close + 1;
    }
    if (!saw_a && ell > 0) throw std::invalid_argument("class literal missing leading window: " + text);
    if (!saw_b && t > 0) throw std::invalid_argument("class literal missing ending window: " + text);
    if (t >= 1 && c.ending[0].is_zero())
        throw std::invalid_argument("class literal has b_0 = 0");
    return c;
}

// ---------------------------------------------------------------------------
// group structure
// ---------------------------------------------------------------------------

namespace {

long long inv_mod(long long a, long long m) {
    long long g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
    while (a1 != 0) {
        long long qt = g / a1;
        g -= qt * a1;
        std::swap(g, a1);
        x -= qt * x1;
        std::swap(x, x1);
    }
    if (g != 1) throw ExactnessError("inv_mod of non-unit");
    return ((x % m) + m) % m;
}

// Smith normal form of M (rows >= relations, cols = generators); returns the diagonal
// and the unimodular column transform V with row_span(M V) diagonal. Row operations are
// not tracked (only the lattice, i.e. the row span, matters here).
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> M, size_t cols,
                                      std::vector<std::vector<long long>>& V) {
    V.assign(cols, std::vector<long long>(cols, 0));
    for (size_t i = 0; i < cols; ++i) V[i][i] = 1;
    size_t rows = M.size();
    size_t k = 0;
    auto col_addmul = [&](size_t dst, size_t src, long long m) {
        for (size_t i = 0; i < rows; ++i) M[i][dst] += m * M[i][src];
        for (size_t i = 0; i < cols; ++i) V[i][dst] += m * V[i][src];
    };
    auto col_swap = [&](size_t a, size_t b) {
        for (size_t i = 0; i < rows; ++i) std::swap(M[i][a], M[i][b]);
        for (size_t i = 0; i < cols; ++i) std::swap(V[i][a], V[i][b]);
    };
    std::vector<long long> diag;
    while (k < cols && k < rows) {
        // find minimal nonzero pivot in the remaining block
        size_t pi = rows, pj = cols;
        long long best = 0;
        for (size_t i = k; i < rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (M[i][j] != 0 && (best == 0 || std::abs(M[i][j]) < best)) {
                    best = std::abs(M[i][j]);
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(M[k], M[pi]);
        if (pj != k) col_swap(k, pj);
        bool clean = true;
        for (size_t i = k + 1; i < rows; ++i)
            if (M[i][k] % M[k][k] != 0) clean = false;
        for (size_t j = k + 1; j < cols; ++j)
            if (M[k][j] % M[k][k] != 0) clean = false;
        if (!clean) {
            // reduce remainders and retry the pivot hunt
            for (size_t i = k + 1; i < rows; ++i) {
                long long qd = M[i][k] / M[k][k];
                if (qd)
                    for (size_t j = k; j < cols; ++j) M[i][j] -= qd * M[k][j];
            }
            for (size_t j = k + 1; j < cols; ++j) {
                long long qd = M[k][j] / M[k][k];
                if (qd) col_addmul(j, k, -qd);
            }
            continue;
        }
        for (size_t i = k + 1; i < rows; ++i) {
            long long qd = M[i][k] / M[k][k];
            if (qd)
                for (size_t j = k; j < cols; ++j) M[i][j] -= qd * M[k][j];
        }
        for (size_t j = k + 1; j < cols; ++j) {
            long long qd = M[k][j] / M[k][k];
            if (qd) col_addmul(j, k, -qd);
        }
        // enforce divisibility of the remaining block by the pivot
        bool divides = true;
        for (size_t i = k + 1; i < rows && divides; ++i)
            for (size_t j = k + 1; j < cols && divides; ++j)
                if (M[i][j] % M[k][k] != 0) {
                    col_addmul(k, j, 1);
                    divides = false;
                }
        if (!divides) continue;
        diag.push_back(std::abs(M[k][k]));
        ++k;
    }
    return diag;
}

struct LineBuild {
    std::vector<HayesClass> gens;
    std::vector<long long> orders;
    std::map<std::vector<uint16_t>, std::vector<long long>> table;
};

std::vector<long long> diag_without_ones(const std::vector<long long>& diag) {
    std::vector<long long> d;
    for (long long v : diag)
        if (v != 1) d.push_back(v);
    return d;
}

// Enumerates all exponent products of the generating set. On success (the map
// exponent vector -> class is a bijection onto the whole group) fills the dlog table;
// otherwise returns the identity-fiber relations for a Smith reduction.
bool try_close(const Field* field, int m, const std::vector<HayesClass>& gens,
               const std::vector<long long>& orders, long long budget, LineBuild& out,
               std::vector<std::vector<long long>>& relations) {
    long long expected = 1;
    for (int i = 0; i < m; ++i) expected *= field->q();
    long long total = 1;
    for (long long o : orders) {
        total *= o;
        if (total > 4 * budget) throw BudgetExceeded("generator closure exceeds budget");
    }

    // per-generator power lists
    std::vector<std::vector<HayesClass>> pows(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
        pows[i].push_back(class_identity(field, m, 0));
        for (long long k = 1; k < orders[i]; ++k)
            pows[i].push_back(class_mul(pows[i].back(), gens[i]));
    }

    std::map<std::vector<uint16_t>, std::vector<long long>> table;
    std::vector<long long> evec(gens.size(), 0);
    relations.clear();
    HayesClass id = class_identity(field, m, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long v = idx;
        for (size_t i = gens.size(); i-- > 0;) {
            evec[i] = v % orders[i];
            v /= orders[i];
        }
        HayesClass cur = id;
        for (size_t i = 0; i < gens.size(); ++i)
            if (evec[i]) cur = class_mul(cur, pows[i][evec[i]]);
        bool fresh = table.emplace(cur.key(), evec).second;
        if (!fresh && cur.is_identity()) {
            bool zero = std::all_of(evec.begin(), evec.end(), [](long long e) { return e == 0; });
            if (!zero) relations.push_back(evec);
        }
    }
    if ((long long)table.size() == expected && total == expected) {
        out.gens = gens;
        out.orders = orders;
        out.table = std::move(table);
        return true;
    }
    if ((long long)table.size() != expected)
        throw ExactnessError("generating set does not span E^l");
    return false;
}

LineBuild build_from_generators(const Field* field, int m, std::vector<HayesClass> gens,
                                long long budget) {
    HayesClass id = class_identity(field, m, 0);
    // drop trivial generators, compute orders by iteration
    std::vector<HayesClass> gs;
    std::vector<long long> orders;
    for (const HayesClass& g : gens) {
        if (g.is_identity()) continue;
        long long o = 1;
        HayesClass cur = g;
        while (!(cur == id)) {
            cur = class_mul(cur, g);
            if (++o > 4 * budget) throw BudgetExceeded("generator order exceeds budget");
        }
        gs.push_back(g);
        orders.push_back(o);
    }

    LineBuild out;
    std::vector<std::vector<long long>> relations;
    if (try_close(field, m, gs, orders, budget, out, relations)) return out;

    // dependent generating set: reduce on the relation lattice
    for (size_t i = 0; i < gs.size(); ++i) {
        std::vector<long long> row(gs.size(), 0);
        row[i] = orders[i];
        relations.push_back(row);
    }
    std::vector<std::vector<long long>> V;
    std::vector<long long> diag = smith_diagonal(relations, gs.size(), V);
    if (diag.size() != gs.size()) throw ExactnessError("relation lattice not full rank");
    std::vector<HayesClass> basis;
    for (size_t j = 0; j < gs.size(); ++j) {
        if (diag[j] == 1) continue;
        HayesClass h = id;
        for (size_t i = 0; i < gs.size(); ++i)
            if (V[i][j]) h = class_mul(h, class_pow(gs[i], V[i][j]));
        basis.push_back(h);
    }
    if (!try_close(field, m, basis, diag_without_ones(diag), budget, out, relations))
        throw ExactnessError("Smith-reduced basis still dependent");
    return out;
}

} // namespace

GroupRef GroupStructure::build_line(FieldRef field, int m, const Options& opt) {
    const Field* F = field.get();
    long long sz = class_group_order(*F, m, 0);
    if (sz > opt.budget) throw BudgetExceeded("group size " + std::to_string(sz) + " exceeds budget");

    auto g = std::shared_ptr<GroupStructure>(new GroupStructure());
    g->field_ = field;
    g->ell_ = m;
    g->t_ = 0;
    g->size_ = sz;

    if (m == 0) {
        g->table_.emplace(class_identity(F, 0, 0).key(), std::vector<long long>{});
        return g;
    }

    long long p = F->p();
    bool prime_field = F->r() == 1;

    std::vector<HayesClass> gens;
    std::vector<long long> formula_orders;
    for (int j = 1; j <= m; ++j) {
        if (j % p == 0) continue;
        long long o = p;
        while (j * o <= m) o *= p;
        for (int b = 0; b < F->r(); ++b) {
            // the class <x^j + c> with c = t^b: leading window has c at position j
            HayesClass gen = class_identity(F, m, 0);
            std::vector<int> coords(F->r(), 0);
            coords[b] = 1;
            gen.leading[j - 1] = F->from_coords(coords);
            gens.push_back(gen);
            formula_orders.push_back(o);
        }
    }
    if (opt.reverse_generators) {
        std::reverse(gens.begin(), gens.end());
        std::reverse(formula_orders.begin(), formula_orders.end());
    }

    if (prime_field && !opt.force_generic_basis) {
        // Lemma-5 basis: orders p^(s_j), s_j minimal with j p^(s_j) > l; independent
        LineBuild out;
        std::vector<std::vector<long long>> relations;
        if (!try_close(F, m, gens, formula_orders, opt.budget, out, relations))
            throw ExactnessError("prime-field generator basis unexpectedly dependent");
        g->gens_ = std::move(out.gens);
        g->orders_ = std::move(out.orders);
        g->table_ = std::move(out.table);
    } else {
        LineBuild out = build_from_generators(F, m, gens, opt.budget);
        g->gens_ = std::move(out.gens);
        g->orders_ = std::move(out.orders);
        g->table_ = std::move(out.table);
    }
    return g;
}

GroupRef GroupStructure::build(FieldRef field, int ell, int t, const Options& opt) {
    if (ell < 0 || t < 0) throw std::invalid_argument("window lengths must be >= 0");
    if (t == 0) return build_line(field, ell, opt);

    long long sz = class_group_order(*field, ell, t);
    if (sz > opt.budget) throw BudgetExceeded("group size " + std::to_string(sz) + " exceeds budget");

    auto g = std::shared_ptr<GroupStructure>(new GroupStructure());
    g->field_ = field;
    g->ell_ = ell;
    g->t_ = t;
    g->size_ = sz;
    g->lead_ = build_line(field, ell, opt);
    g->end_ = build_line(field, t - 1, opt);

    const Field* F = field.get();
    g->gens_.push_back(g->compose(g->lead_->identity(), 1, g->end_->identity()));
    g->orders_.push_back(F->q() - 1);
    for (size_t i = 0; i < g->lead_->generators().size(); ++i) {
        g->gens_.push_back(g->compose(g->lead_->generators()[i], 0, g->end_->identity()));
        g->orders_.push_back(g->lead_->orders()[i]);
    }
    for (size_t i = 0; i < g->end_->generators().size(); ++i) {
        g->gens_.push_back(g->compose(g->lead_->identity(), 0, g->end_->generators()[i]));
        g->orders_.push_back(g->end_->orders()[i]);
    }
    return g;
}

const GroupStructure& GroupStructure::ending_part() const {
    if (t_ == 0) throw std::logic_error("ending part requires t >= 1");
    return *end_;
}

GroupStructure::Split GroupStructure::split(const HayesClass& eps) const {
    if (t_ == 0) throw std::invalid_argument("split requires t >= 1");
    if (!contains(eps)) throw std::invalid_argument("class not in this group");
    const Field* F = field_.get();
    Split s;
    s.eps1.field = F;
    s.eps1.ell = ell_;
    s.eps1.t = 0;
    s.eps1.leading = eps.leading;
    Fel b0 = eps.ending[0];
    s.n = F->dlog(b0);
    s.eps2.field = F;
    s.eps2.ell = t_ - 1;
    s.eps2.t = 0;
    s.eps2.leading.reserve(t_ - 1);
    Fel inv = b0.inverse();
    for (int j = 1; j < t_; ++j) s.eps2.leading.push_back(eps.ending[j] * inv);
    return s;
}

HayesClass GroupStructure::compose(const HayesClass& eps1, long long n,
                                   const HayesClass& eps2) const {
    if (t_ == 0) throw std::invalid_argument("compose requires t >= 1");
    if (eps1.ell != ell_ || eps1.t != 0 || eps2.ell != t_ - 1 || eps2.t != 0)
        throw std::invalid_argument("component shapes do not match the group");
    const Field* F = field_.get();
    HayesClass c;
    c.field = F;
    c.ell = ell_;
    c.t = t_;
    c.leading = eps1.leading;
    Fel b0 = F->pow(F->gamma(), ((n % (F->q() - 1)) + (F->q() - 1)) % (F->q() - 1));
    c.ending.reserve(t_);
    c.ending.push_back(b0);
    for (int j = 0; j < t_ - 1; ++j) c.ending.push_back(b0 * eps2.leading[j]);
    return c;
}

std::vector<long long> GroupStructure::dlog(const HayesClass& c) const {
    if (!contains(c)) throw std::invalid_argument("class not in this group");
    if (t_ == 0) {
        auto it = table_.find(c.key());
        if (it == table_.end()) throw std::invalid_argument("class missing from dlog table");
        return it->second;
    }
    Split s = split(c);
    std::vector<long long> e;
    e.reserve(orders_.size());
    e.push_back(s.n);
    for (long long v : lead_->dlog(s.eps1)) e.push_back(v);
    for (long long v : end_->dlog(s.eps2)) e.push_back(v);
    return e;
}

HayesClass GroupStructure::from_exponents(const std::vector<long long>& e) const {
    if (e.size() != orders_.size()) throw std::invalid_argument("exponent vector length mismatch");
    if (t_ == 0) {
        HayesClass acc = identity();
        for (size_t i = 0; i < gens_.size(); ++i) {
            long long v = ((e[i] % orders_[i]) + orders_[i]) % orders_[i];
            if (v) acc = class_mul(acc, class_pow(gens_[i], v));
        }
        return acc;
    }
    std::vector<long long> el(e.begin() + 1, e.begin() + 1 + lead_->orders().size());
    std::vector<long long> ee(e.begin() + 1 + lead_->orders().size(), e.end());
    return compose(lead_->from_exponents(el), e[0], end_->from_exponents(ee));
}

long long GroupStructure::rank(const HayesClass& c) const {
    std::vector<long long> e = dlog(c);
    long long idx = 0;
    for (size_t i = 0; i < e.size(); ++i) idx = idx * orders_[i] + e[i];
    return idx;
}

HayesClass GroupStructure::at_rank(long long idx) const {
    if (idx < 0 || idx >= size_) throw std::invalid_argument("rank out of range");
    std::vector<long long> e(orders_.size(), 0);
    for (size_t i = orders_.size(); i-- > 0;) {
        e[i] = idx % orders_[i];
        idx /= orders_[i];
    }
    return from_exponents(e);
}

long long GroupStructure::unit_root_count(long long k) const {
    long long n = 1;
    for (long long o : orders_) n *= std::gcd(k, o);
    return n;
}

long long GroupStructure::kth_root_count(const HayesClass& eps, long long k) const {
    std::vector<long long> e = dlog(eps);
    long long n = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long g = std::gcd(k, orders_[i]);
        if (e[i] % g != 0) return 0;
        n *= g;
    }
    return n;
}

std::vector<HayesClass> GroupStructure::kth_roots(const HayesClass& eps, long long k) const {
    if (k < 1) throw std::invalid_argument("root index must be >= 1");
    std::vector<long long> e = dlog(eps);
    // per-component solutions of k x = e_h (mod r_h)
    std::vector<std::vector<long long>> sols(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long r = orders_[i];
        if (r == 1) { sols[i] = {0}; continue; }
        long long g = std::gcd(k, r);
        if (e[i] % g != 0) return {};
        long long r2 = r / g;
        long long x0 = r2 == 1 ? 0 : ((e[i] / g) % r2) * inv_mod((k / g) % r2, r2) % r2;
        for (long long j = 0; j < g; ++j) sols[i].push_back((x0 + j * r2) % r);
    }
    std::vector<HayesClass> out;
    std::vector<size_t> pick(orders_.size(), 0);
    std::vector<long long> evec(orders_.size());
    while (true) {
        for (size_t i = 0; i < orders_.size(); ++i) evec[i] = sols[i][pick[i]];
        out.push_back(from_exponents(evec));
        size_t i = orders_.size();
        while (i-- > 0) {
            if (++pick[i] < sols[i].size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (orders_.empty()) return out;
    }
}

} // namespace fqcount
