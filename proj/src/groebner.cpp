#include "ginlab/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace ginlab {

GradedIdeal GradedIdeal::make(RingCtx ctx, std::vector<Polynomial> gens) {
    std::vector<Polynomial> kept;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        require(g.is_homogeneous(), errc::input,
                "generator '" + poly_to_string(ctx, g) + "' is not homogeneous");
        require(g.degree() >= 1, errc::input, "constant generator makes the unit ideal");
        kept.push_back(std::move(g));
    }
    return GradedIdeal{std::move(ctx), std::move(kept)};
}

GradedIdeal GradedIdeal::from_monomial_ideal(const MonomialIdeal& I) {
    std::vector<Polynomial> gens;
    for (const auto& u : I.gens())
        gens.push_back(poly_monomial(I.ctx(), TermOrder::degrevlex, u, I.ctx().field.one()));
    return GradedIdeal{I.ctx(), std::move(gens)};
}

int GradedIdeal::min_gen_degree() const {
    int d = -1;
    for (const auto& g : gens)
        if (d < 0 || g.degree() < d) d = g.degree();
    return d;
}

std::optional<MonomialIdeal> as_monomial_ideal(const GradedIdeal& I) {
    std::vector<Monomial> mons;
    for (const auto& g : I.gens) {
        if (!g.is_monomial()) return std::nullopt;
        mons.push_back(g.leading().mono);
    }
    return MonomialIdeal::from_monomials(I.ctx, std::move(mons));
}

MonomialIdeal GroebnerBasis::leading_ideal() const {
    std::vector<Monomial> lms;
    for (const auto& g : elements) lms.push_back(g.leading().mono);
    return MonomialIdeal::from_monomials(ctx, std::move(lms));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    const RingCtx& ctx = gb.ctx;
    Polynomial h = f.order() == gb.order ? f : with_order(ctx, f, gb.order);
    std::vector<Term> remainder;
    while (!h.is_zero()) {
        const Term& lt = h.leading();
        const Polynomial* divisor = nullptr;
        for (const auto& g : gb.elements) {
            if (g.leading().mono.divides(lt.mono)) {
                divisor = &g;
                break;
            }
        }
        if (divisor == nullptr) {
            remainder.push_back(lt);
            std::vector<Term> rest(h.terms().begin() + 1, h.terms().end());
            h = Polynomial::from_terms(ctx, gb.order, std::move(rest));
            continue;
        }
        Monomial q = lt.mono.div_exact(divisor->leading().mono);
        Scalar c = ctx.field.div(lt.coeff, divisor->leading().coeff);
        h = poly_sub(ctx, h, poly_mul_term(ctx, *divisor, q, c));
    }
    return Polynomial::from_terms(ctx, gb.order, std::move(remainder));
}

namespace {

// top-reduction only; tails are cleaned up by the final interreduction
Polynomial top_reduce(const RingCtx& ctx, Polynomial h, const std::vector<Polynomial>& basis) {
    bool reduced = true;
    while (!h.is_zero() && reduced) {
        reduced = false;
        const Term& lt = h.leading();
        for (const auto& g : basis) {
            if (g.leading().mono.divides(lt.mono)) {
                Monomial q = lt.mono.div_exact(g.leading().mono);
                Scalar c = ctx.field.div(lt.coeff, g.leading().coeff);
                h = poly_sub(ctx, h, poly_mul_term(ctx, g, q, c));
                reduced = true;
                break;
            }
        }
    }
    return h;
}

struct Pair {
    int deg;
    Monomial lcm;
    int i, j;
};

struct PairLess {
    // normal strategy: lowest lcm degree first, ties by the order on the lcm,
    // then by indices for full determinism
    TermOrder order;
    bool operator()(const Pair& a, const Pair& b) const {
        if (a.deg != b.deg) return a.deg < b.deg;
        int c = compare(order, a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
};

} // namespace

GroebnerBasis buchberger(const GradedIdeal& I, TermOrder order, int degree_guard) {
    const RingCtx& ctx = I.ctx;
    std::vector<Polynomial> basis;
    for (const auto& g : I.gens) {
        Polynomial p = with_order(ctx, g, order);
        if (!p.is_zero()) basis.push_back(poly_scale(ctx, p, ctx.field.inv(p.leading().coeff)));
    }

    std::set<Pair, PairLess> queue{PairLess{order}};
    std::set<std::pair<int, int>> pending; // pairs not yet treated (chain criterion bookkeeping)
    auto push_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) {
            const Monomial& a = basis[static_cast<std::size_t>(i)].leading().mono;
            const Monomial& b = basis[static_cast<std::size_t>(j)].leading().mono;
            if (a.coprime(b)) continue; // product criterion
            Monomial l = a.lcm_with(b);
            queue.insert(Pair{l.degree(), l, i, j});
            pending.insert({i, j});
        }
    };
    for (std::size_t j = 0; j < basis.size(); ++j) push_pairs_for(static_cast<int>(j));

    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        pending.erase({p.i, p.j});
        require(p.deg <= degree_guard, errc::resource,
                "degree guard (" + std::to_string(degree_guard) +
                    ") exceeded during Groebner computation");

        // chain criterion: skip when some basis element divides the lcm and
        // both side pairs have already been treated
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            int ki = static_cast<int>(k);
            if (ki == p.i || ki == p.j) continue;
            if (!basis[k].leading().mono.divides(p.lcm)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (!pending.count(key(p.i, ki)) && !pending.count(key(p.j, ki))) skip = true;
        }
        if (skip) continue;

        const Polynomial& f = basis[static_cast<std::size_t>(p.i)];
        const Polynomial& g = basis[static_cast<std::size_t>(p.j)];
        Polynomial spoly = poly_sub(
            ctx, poly_mul_term(ctx, f, p.lcm.div_exact(f.leading().mono), ctx.field.one()),
            poly_mul_term(ctx, g, p.lcm.div_exact(g.leading().mono), ctx.field.one()));
        Polynomial r = top_reduce(ctx, std::move(spoly), basis);
        if (r.is_zero()) continue;
        basis.push_back(poly_scale(ctx, r, ctx.field.inv(r.leading().coeff)));
        push_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial is divisible by another's
    std::vector<Polynomial> minimal;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
            if (a == b) continue;
            const Monomial& la = basis[a].leading().mono;
            const Monomial& lb = basis[b].leading().mono;
            if (lb.divides(la) && (la != lb || b < a)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[a]);
    }

    // interreduce tails to get the reduced basis
    GroebnerBasis out{ctx, order, minimal, I.gens};
    for (std::size_t a = 0; a < minimal.size(); ++a) {
        GroebnerBasis others{ctx, order, {}, {}};
        for (std::size_t b = 0; b < minimal.size(); ++b)
            if (b != a) others.elements.push_back(minimal[b]);
        minimal[a] = normal_form(minimal[a], others);
    }
    // canonical listing: leading degree ascending, then descending within a degree
    std::sort(minimal.begin(), minimal.end(), [order](const Polynomial& x, const Polynomial& y) {
        const Monomial &a = x.leading().mono, &b = y.leading().mono;
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return compare(order, a, b) > 0;
    });
    out.elements = std::move(minimal);
    return out;
}

MonomialIdeal initial_ideal(const GradedIdeal& I, TermOrder order, int degree_guard) {
    return buchberger(I, order, degree_guard).leading_ideal();
}

std::vector<Monomial> std_monomials(const MonomialIdeal& J, int d, TermOrder order) {
    require(d >= 0, errc::input, "negative degree");
    std::vector<Monomial> out;
    for (const auto& u : monomials_of_degree(J.ctx().n, d))
        if (!J.contains(u)) out.push_back(u);
    std::sort(out.begin(), out.end(),
              [order](const Monomial& a, const Monomial& b) { return compare(order, a, b) > 0; });
    return out;
}

std::vector<long> hilbert_function(const MonomialIdeal& J, int d_max) {
    std::vector<long> hf;
    for (int d = 0; d <= d_max; ++d) {
        long count = 0;
        for (const auto& u : monomials_of_degree(J.ctx().n, d))
            if (!J.contains(u)) ++count;
        hf.push_back(count);
    }
    return hf;
}

mpq_class HilbertPolynomial::eval(long d) const {
    mpq_class acc = 0;
    for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * d + coeffs[k];
    return acc;
}

std::string HilbertPolynomial::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t k = coeffs.size(); k-- > 0;) {
        if (coeffs[k] == 0) continue;
        std::string c = coeffs[k].get_str();
        if (!s.empty()) {
            s += (c[0] == '-') ? " - " : " + ";
            if (c[0] == '-') c = c.substr(1);
        }
        if (k == 0) {
            s += c;
        } else {
            s += (c == "1" ? "" : c + "*") + std::string("d") + (k > 1 ? "^" + std::to_string(k) : "");
        }
    }
    return s.empty() ? "0" : s;
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& J, int reg_bound) {
    int n = J.ctx().n;
    std::vector<long> hf = hilbert_function(J, reg_bound + n + 1);

    // Lagrange interpolation through (reg_bound+1 .. reg_bound+n); degree < n
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(n), mpq_class(0));
    for (int s = 1; s <= n; ++s) {
        long xs = reg_bound + s;
        // numerator polynomial prod_{t != s} (d - xt), expanded incrementally
        std::vector<mpq_class> numer{1};
        mpq_class denom = 1;
        for (int t = 1; t <= n; ++t) {
            if (t == s) continue;
            long xt = reg_bound + t;
            std::vector<mpq_class> next(numer.size() + 1, mpq_class(0));
            for (std::size_t k = 0; k < numer.size(); ++k) {
                next[k + 1] += numer[k];
                next[k] -= numer[k] * xt;
            }
            numer = std::move(next);
            denom *= xs - xt;
        }
        mpq_class w = mpq_class(hf[static_cast<std::size_t>(xs)]) / denom;
        for (std::size_t k = 0; k < numer.size(); ++k) coeffs[k] += numer[k] * w;
    }
    HilbertPolynomial hp;
    hp.coeffs = std::move(coeffs);
    while (!hp.coeffs.empty() && hp.coeffs.back() == 0) hp.coeffs.pop_back();

    long check_at = reg_bound + n + 1;
    require(hp.eval(check_at) == hf[static_cast<std::size_t>(check_at)], errc::internal,
            "Hilbert polynomial interpolation window too small (regularity bound " +
                std::to_string(reg_bound) + " insufficient)");
    return hp;
}

HilbertPolynomial hilbert_polynomial(const MonomialIdeal& J) {
    if (J.is_zero()) {
        // S itself: binom(d+n-1, n-1) as a polynomial, via interpolation with bound 0
        return hilbert_polynomial(J, 0);
    }
    int bound;
    if (is_stable(J)) {
        bound = J.max_degree(); // Eliahou-Kervaire: regularity = max generator degree
    } else {
        Monomial l = J.gens().front();
        for (const auto& g : J.gens()) l = l.lcm_with(g);
        bound = l.degree(); // Taylor complex bound
    }
    return hilbert_polynomial(J, bound);
}

} // namespace ginlab
