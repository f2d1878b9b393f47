#include "ginlab/ring.hpp"

#include <algorithm>
#include <set>

namespace ginlab {

RingCtx RingCtx::make(int n, FieldSpec field, std::vector<std::string> names) {
    require(n >= 1, errc::input, "ring needs at least one variable");
    require(n <= kMaxVars, errc::input,
            "at most " + std::to_string(kMaxVars) + " variables supported");
    RingCtx ctx;
    ctx.n = n;
    ctx.field = field;
    if (names.empty()) {
        for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    }
    require(static_cast<int>(names.size()) == n, errc::input, "variable name count != n");
    std::set<std::string> uniq(names.begin(), names.end());
    require(static_cast<int>(uniq.size()) == n, errc::input, "variable names must be distinct");
    ctx.var_names = std::move(names);
    return ctx;
}

int RingCtx::var_index(const std::string& name) const {
    for (int i = 0; i < n; ++i)
        if (var_names[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

Monomial Monomial::one(int n) {
    Monomial m;
    m.n_ = n;
    return m;
}

Monomial Monomial::variable(int n, int i) {
    require(0 <= i && i < n, errc::internal, "variable index out of range");
    Monomial m = one(n);
    m.e_[static_cast<std::size_t>(i)] = 1;
    m.deg_ = 1;
    return m;
}

Monomial Monomial::from_exponents(const std::vector<int>& e) {
    require(!e.empty() && static_cast<int>(e.size()) <= kMaxVars, errc::input,
            "bad exponent vector length");
    Monomial m = one(static_cast<int>(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i) {
        require(e[i] >= 0, errc::input, "negative exponent");
        m.e_[i] = static_cast<std::uint16_t>(e[i]);
        m.deg_ += e[i];
    }
    return m;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < n_; ++i) m.e_[static_cast<std::size_t>(i)] += o.e_[static_cast<std::size_t>(i)];
    m.deg_ += o.deg_;
    return m;
}

Monomial Monomial::times_var(int i, int k) const {
    Monomial m = *this;
    m.e_[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(m.e_[static_cast<std::size_t>(i)] + k);
    m.deg_ += k;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] > o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

Monomial Monomial::div_exact(const Monomial& o) const {
    Monomial m = *this;
    for (int i = 0; i < n_; ++i) {
        require(e_[static_cast<std::size_t>(i)] >= o.e_[static_cast<std::size_t>(i)], errc::internal,
                "monomial division is not exact");
        m.e_[static_cast<std::size_t>(i)] -= o.e_[static_cast<std::size_t>(i)];
    }
    m.deg_ -= o.deg_;
    return m;
}

Monomial Monomial::lcm_with(const Monomial& o) const {
    Monomial m = *this;
    m.deg_ = 0;
    for (int i = 0; i < n_; ++i) {
        m.e_[static_cast<std::size_t>(i)] = std::max(e_[static_cast<std::size_t>(i)], o.e_[static_cast<std::size_t>(i)]);
        m.deg_ += m.e_[static_cast<std::size_t>(i)];
    }
    return m;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
        if (e_[static_cast<std::size_t>(i)] && o.e_[static_cast<std::size_t>(i)]) return false;
    return true;
}

int max_index(const Monomial& u) {
    for (int i = u.vars() - 1; i >= 0; --i)
        if (u.exponent(i) > 0) return i + 1;
    return 0; // m(1) := 0 by convention
}

int compare(TermOrder order, const Monomial& a, const Monomial& b) {
    if (order != TermOrder::lex && a.degree() != b.degree())
        return a.degree() < b.degree() ? -1 : 1;
    if (order == TermOrder::degrevlex) {
        // ties: smaller exponent on the last variable where they differ wins
        for (int i = a.vars() - 1; i >= 0; --i) {
            if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i) ? 1 : -1;
        }
        return 0;
    }
    for (int i = 0; i < a.vars(); ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
    }
    return 0;
}

const char* order_name(TermOrder order) {
    switch (order) {
        case TermOrder::degrevlex: return "degrevlex";
        case TermOrder::deglex: return "deglex";
        case TermOrder::lex: return "lex";
    }
    return "?";
}

TermOrder order_from_name(const std::string& name) {
    if (name == "degrevlex") return TermOrder::degrevlex;
    if (name == "deglex") return TermOrder::deglex;
    if (name == "lex" || name == "pure_lex") return TermOrder::lex;
    throw error(errc::input, "unknown term order '" + name + "'");
}

const Term& Polynomial::leading() const {
    require(!terms_.empty(), errc::internal, "leading term of the zero polynomial");
    return terms_.front();
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    for (const auto& t : terms_)
        if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
}

Polynomial Polynomial::from_terms(const RingCtx& ctx, TermOrder order, std::vector<Term> terms) {
    auto above = [order](const Term& a, const Term& b) { return compare(order, a.mono, b.mono) > 0; };
    if (!std::is_sorted(terms.begin(), terms.end(), above))
        std::stable_sort(terms.begin(), terms.end(), above);
    Polynomial p(order);
    for (auto& t : terms) {
        require(t.mono.degree() <= ctx.max_degree, errc::resource,
                "monomial degree exceeds the max-degree guard (" + std::to_string(ctx.max_degree) + ")");
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff = ctx.field.add(p.terms_.back().coeff, t.coeff);
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    std::erase_if(p.terms_, [&](const Term& t) { return ctx.field.is_zero(t.coeff); });
    return p;
}

Polynomial poly_zero(TermOrder order) { return Polynomial(order); }

Polynomial poly_monomial(const RingCtx& ctx, TermOrder order, const Monomial& m, const Scalar& c) {
    return Polynomial::from_terms(ctx, order, {Term{m, c}});
}

Polynomial poly_variable(const RingCtx& ctx, TermOrder order, int i) {
    return poly_monomial(ctx, order, Monomial::variable(ctx.n, i), ctx.field.one());
}

namespace {

void check_orders(const Polynomial& f, const Polynomial& g) {
    require(f.order() == g.order(), errc::internal, "mixed term orders in arithmetic");
}

} // namespace

Polynomial poly_add(const RingCtx& ctx, const Polynomial& f, const Polynomial& g) {
    check_orders(f, g);
    const FieldSpec& k = ctx.field;
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    const auto& a = f.terms();
    const auto& b = g.terms();
    while (i < a.size() && j < b.size()) {
        int c = compare(f.order(), a[i].mono, b[j].mono);
        if (c > 0) {
            out.push_back(a[i++]);
        } else if (c < 0) {
            out.push_back(b[j++]);
        } else {
            Scalar s = k.add(a[i].coeff, b[j].coeff);
            if (!k.is_zero(s)) out.push_back(Term{a[i].mono, std::move(s)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    Polynomial p(f.order());
    // already sorted and combined; rebuild without re-sorting
    return Polynomial::from_terms(ctx, f.order(), std::move(out));
}

Polynomial poly_neg(const RingCtx& ctx, const Polynomial& f) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{t.mono, ctx.field.neg(t.coeff)});
    return Polynomial::from_terms(ctx, f.order(), std::move(out));
}

Polynomial poly_sub(const RingCtx& ctx, const Polynomial& f, const Polynomial& g) {
    return poly_add(ctx, f, poly_neg(ctx, g));
}

Polynomial poly_scale(const RingCtx& ctx, const Polynomial& f, const Scalar& c) {
    if (ctx.field.is_zero(c)) return Polynomial(f.order());
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{t.mono, ctx.field.mul(t.coeff, c)});
    return Polynomial::from_terms(ctx, f.order(), std::move(out));
}

Polynomial poly_mul_term(const RingCtx& ctx, const Polynomial& f, const Monomial& u, const Scalar& c) {
    if (ctx.field.is_zero(c)) return Polynomial(f.order());
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) out.push_back(Term{t.mono.times(u), ctx.field.mul(t.coeff, c)});
    // multiplication by a fixed monomial preserves the sort
    return Polynomial::from_terms(ctx, f.order(), std::move(out));
}

Polynomial poly_mul(const RingCtx& ctx, const Polynomial& f, const Polynomial& g) {
    check_orders(f, g);
    Polynomial acc(f.order());
    for (const auto& t : g.terms()) acc = poly_add(ctx, acc, poly_mul_term(ctx, f, t.mono, t.coeff));
    return acc;
}

Polynomial poly_pow(const RingCtx& ctx, const Polynomial& f, int k) {
    require(k >= 0, errc::input, "negative polynomial power");
    Polynomial acc = poly_monomial(ctx, f.order(), Monomial::one(ctx.n), ctx.field.one());
    for (int i = 0; i < k; ++i) acc = poly_mul(ctx, acc, f);
    return acc;
}

Polynomial with_order(const RingCtx& ctx, const Polynomial& f, TermOrder order) {
    return Polynomial::from_terms(ctx, order, f.terms());
}

bool poly_eq(const RingCtx& ctx, const Polynomial& f, const Polynomial& g) {
    if (f.size() != g.size()) return false;
    Polynomial gg = f.order() == g.order() ? g : with_order(ctx, g, f.order());
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f.terms()[i].mono != gg.terms()[i].mono) return false;
        if (!ctx.field.eq(f.terms()[i].coeff, gg.terms()[i].coeff)) return false;
    }
    return true;
}

LinearChange LinearChange::make(const RingCtx& ctx, DenseMatrix m) {
    require(m.rows() == static_cast<std::size_t>(ctx.n) && m.cols() == m.rows(), errc::input,
            "coordinate change must be n x n");
    require(rank(m) == m.rows(), errc::input, "coordinate change is not invertible");
    return LinearChange{std::move(m)};
}

LinearChange LinearChange::inverted() const { return LinearChange{inverse(matrix)}; }

Polynomial apply_change(const RingCtx& ctx, const Polynomial& f, const LinearChange& g) {
    const FieldSpec& k = ctx.field;
    // images of the variables as linear forms
    std::vector<Polynomial> image;
    for (int i = 0; i < ctx.n; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < ctx.n; ++j) {
            const Scalar& c = g.matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!k.is_zero(c)) terms.push_back(Term{Monomial::variable(ctx.n, j), c});
        }
        image.push_back(Polynomial::from_terms(ctx, f.order(), std::move(terms)));
    }
    // powers of each image, filled on demand
    std::vector<std::vector<Polynomial>> powers(static_cast<std::size_t>(ctx.n));
    auto power = [&](int i, int e) -> const Polynomial& {
        auto& cache = powers[static_cast<std::size_t>(i)];
        if (cache.empty()) cache.push_back(poly_monomial(ctx, f.order(), Monomial::one(ctx.n), k.one()));
        while (static_cast<int>(cache.size()) <= e)
            cache.push_back(poly_mul(ctx, cache.back(), image[static_cast<std::size_t>(i)]));
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial out(f.order());
    for (const auto& t : f.terms()) {
        Polynomial prod = poly_monomial(ctx, f.order(), Monomial::one(ctx.n), t.coeff);
        for (int i = 0; i < ctx.n; ++i) {
            int e = t.mono.exponent(i);
            if (e > 0) prod = poly_mul(ctx, prod, power(i, e));
        }
        out = poly_add(ctx, out, prod);
    }
    return out;
}

namespace {

void enumerate_monomials(int n, int d, int i, Monomial prefix, std::vector<Monomial>& out) {
    if (i == n - 1) {
        out.push_back(prefix.times_var(i, d));
        return;
    }
    for (int e = d; e >= 0; --e) enumerate_monomials(n, d - e, i + 1, prefix.times_var(i, e), out);
}

} // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
    require(d >= 0, errc::input, "negative degree");
    std::vector<Monomial> out;
    out.reserve(static_cast<std::size_t>(count_monomials(n, d)));
    enumerate_monomials(n, d, 0, Monomial::one(n), out);
    return out;
}

long count_monomials(int n, int d) { return binomial(n - 1 + d, n - 1); }

long binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i) {
        require(r <= (1L << 56) / (n - k + i), errc::resource, "binomial overflow");
        r = r * (n - k + i) / i;
    }
    return r;
}

std::string monomial_to_string(const RingCtx& ctx, const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < ctx.n; ++i) {
        int e = m.exponent(i);
        if (e == 0) continue;
        if (!s.empty()) s += "*";
        s += ctx.var(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string poly_to_string(const RingCtx& ctx, const Polynomial& f) {
    if (f.is_zero()) return "0";
    const FieldSpec& k = ctx.field;
    std::string s;
    bool first = true;
    for (const auto& t : f.terms()) {
        std::string c = k.str(t.coeff);
        bool negative = !c.empty() && c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (first) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            s += mag;
        } else if (mag == "1") {
            s += monomial_to_string(ctx, t.mono);
        } else {
            s += mag + "*" + monomial_to_string(ctx, t.mono);
        }
    }
    return s;
}

} // namespace ginlab
