#include "ginlab/monideal.hpp"

#include <algorithm>

namespace ginlab {

namespace {

// canonical generator order: degree first, then descending degrevlex
bool canonical_less(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return compare(TermOrder::degrevlex, a, b) > 0;
}

} // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> mons) {
    std::sort(mons.begin(), mons.end(), canonical_less);
    mons.erase(std::unique(mons.begin(), mons.end()), mons.end());
    std::vector<Monomial> out;
    for (const auto& u : mons) {
        bool redundant = std::any_of(out.begin(), out.end(),
                                     [&](const Monomial& v) { return v.divides(u); });
        if (!redundant) out.push_back(u);
    }
    return out;
}

MonomialIdeal MonomialIdeal::from_monomials(const RingCtx& ctx, std::vector<Monomial> mons) {
    MonomialIdeal I(ctx);
    for (const auto& u : mons) {
        require(u.vars() == ctx.n, errc::input, "monomial from a different ring");
        require(!u.is_one(), errc::input, "the unit ideal is not supported");
    }
    I.gens_ = minimalize(std::move(mons));
    return I;
}

MonomialIdeal MonomialIdeal::zero(const RingCtx& ctx) { return MonomialIdeal(ctx); }

MonomialIdeal MonomialIdeal::power_of_maxideal(const RingCtx& ctx, int d) {
    require(d >= 1, errc::input, "power of the maximal ideal needs d >= 1");
    return from_monomials(ctx, monomials_of_degree(ctx.n, d));
}

bool MonomialIdeal::contains(const Monomial& u) const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [&](const Monomial& g) { return g.divides(u); });
}

int MonomialIdeal::min_degree() const {
    return gens_.empty() ? -1 : gens_.front().degree();
}

int MonomialIdeal::max_degree() const {
    return gens_.empty() ? -1 : gens_.back().degree();
}

std::string MonomialIdeal::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += monomial_to_string(ctx_, gens_[i]);
    }
    return s + ")";
}

MStats m_stats(const MonomialIdeal& I) {
    int n = I.ctx().n;
    MStats st;
    st.m.assign(static_cast<std::size_t>(n) + 1, 0);
    st.m_le.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& u : I.gens()) ++st.m[static_cast<std::size_t>(max_index(u))];
    for (int i = 1; i <= n; ++i)
        st.m_le[static_cast<std::size_t>(i)] = st.m_le[static_cast<std::size_t>(i - 1)] + st.m[static_cast<std::size_t>(i)];
    return st;
}

bool is_stable(const MonomialIdeal& I) {
    for (const auto& u : I.gens()) {
        int m = max_index(u);
        for (int i = 1; i < m; ++i) {
            Monomial w = u.div_exact(Monomial::variable(u.vars(), m - 1)).times_var(i - 1);
            if (!I.contains(w)) return false;
        }
    }
    return true;
}

bool is_strongly_stable(const MonomialIdeal& I) {
    for (const auto& u : I.gens()) {
        for (int j = 1; j <= u.vars(); ++j) {
            if (u.exponent(j - 1) == 0) continue;
            for (int i = 1; i < j; ++i) {
                Monomial w = u.div_exact(Monomial::variable(u.vars(), j - 1)).times_var(i - 1);
                if (!I.contains(w)) return false;
            }
        }
    }
    return true;
}

void BettiTable::add(int i, int j, long count) {
    if (count == 0) return;
    require(count > 0 && i >= 0, errc::internal, "negative Betti entry");
    e_[{i, j}] += count;
}

long BettiTable::entry(int i, int j) const {
    auto it = e_.find({i, j});
    return it == e_.end() ? 0 : it->second;
}

long BettiTable::total(int i) const {
    long t = 0;
    for (const auto& [key, v] : e_)
        if (key.first == i) t += v;
    return t;
}

std::vector<long> BettiTable::totals() const {
    std::vector<long> out(static_cast<std::size_t>(max_index() + 1), 0);
    for (const auto& [key, v] : e_) out[static_cast<std::size_t>(key.first)] += v;
    return out;
}

int BettiTable::max_index() const {
    int m = -1;
    for (const auto& [key, v] : e_) m = std::max(m, key.first);
    return m;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const auto& [key, v] : e_) r = std::max(r, key.second - key.first);
    return r;
}

BettiTable BettiTable::to_ideal_view() const {
    if (conv_ == BettiConvention::for_ideal) return *this;
    BettiTable out(BettiConvention::for_ideal);
    for (const auto& [key, v] : e_) {
        if (key.first == 0) continue; // drop beta_0(S/I) = 1
        out.add(key.first - 1, key.second, v);
    }
    return out;
}

BettiTable BettiTable::to_quotient_view() const {
    if (conv_ == BettiConvention::for_quotient) return *this;
    BettiTable out(BettiConvention::for_quotient);
    out.add(0, 0, 1);
    for (const auto& [key, v] : e_) out.add(key.first + 1, key.second, v);
    return out;
}

BettiTable ek_graded_betti(const MonomialIdeal& I) {
    require(is_stable(I), errc::input, "Eliahou-Kervaire formula needs a stable ideal");
    BettiTable table(BettiConvention::for_ideal);
    for (const auto& u : I.gens()) {
        int m = max_index(u);
        for (int i = 0; i <= m - 1; ++i) table.add(i, u.degree() + i, binomial(m - 1, i));
    }
    return table;
}

MonomialIdeal component_ideal(const MonomialIdeal& I, int j) {
    require(j >= 0, errc::input, "component degree must be nonnegative");
    std::vector<Monomial> gens;
    for (const auto& g : I.gens()) {
        if (g.degree() > j) continue;
        for (const auto& u : monomials_of_degree(I.ctx().n, j - g.degree()))
            gens.push_back(g.times(u));
    }
    return MonomialIdeal::from_monomials(I.ctx(), std::move(gens));
}

MonomialIdeal times_maxideal(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const auto& g : I.gens())
        for (int i = 0; i < I.ctx().n; ++i) gens.push_back(g.times_var(i));
    return MonomialIdeal::from_monomials(I.ctx(), std::move(gens));
}

BettiTable cwl_graded_betti(const MonomialIdeal& I) {
    BettiTable table(BettiConvention::for_ideal);
    if (I.is_zero()) return table;
    int dmin = I.min_degree(), dmax = I.max_degree();
    for (int j = dmin; j <= dmax; ++j) {
        MonomialIdeal comp = component_ideal(I, j);
        require(is_stable(comp), errc::input,
                "component in degree " + std::to_string(j) + " is not stable");
        BettiTable numer = ek_graded_betti(comp);
        BettiTable denom(BettiConvention::for_ideal);
        if (j > dmin) denom = ek_graded_betti(times_maxideal(component_ideal(I, j - 1)));
        for (int i = 0;; ++i) {
            long v = numer.total(i) - denom.total(i);
            if (numer.total(i) == 0 && denom.total(i) == 0) break;
            require(v >= 0, errc::internal, "componentwise Betti difference went negative");
            table.add(i, i + j, v);
        }
    }
    return table;
}

long wonderful_delta(const MonomialIdeal& I, int i, int d, int N) {
    require(is_strongly_stable(I), errc::input, "formula needs a strongly stable ideal");
    require(!I.is_zero(), errc::input, "formula needs a nonzero ideal");
    require(1 <= d && d <= N, errc::input, "need 1 <= d <= N");
    require(d <= I.min_degree() && I.max_degree() <= N, errc::input,
            "generator degrees must lie in [d, N]");
    int n = I.ctx().n;
    long sum = 0;
    for (int j = d; j <= N; ++j) {
        MStats st = m_stats(component_ideal(I, j));
        for (int k = i + 1; k <= n; ++k)
            sum += st.m_le[static_cast<std::size_t>(k - 1)] * binomial(k - 1, i);
    }
    return sum;
}

MonomialIdeal lex_segment_ideal(const RingCtx& ctx, const std::vector<long>& ideal_hf) {
    require(!ideal_hf.empty(), errc::input, "empty Hilbert function window");
    require(ideal_hf[0] == 0, errc::input, "dim I_0 > 0 would make I the unit ideal");
    int D = static_cast<int>(ideal_hf.size()) - 1;

    std::vector<Monomial> gens;
    std::vector<Monomial> prev_segment;           // L_{d-1}
    int last_new_gen_degree = 0;
    for (int d = 1; d <= D; ++d) {
        long want = ideal_hf[static_cast<std::size_t>(d)];
        long dim_sd = count_monomials(ctx.n, d);
        require(0 <= want && want <= dim_sd, errc::input,
                "dim I_" + std::to_string(d) + " = " + std::to_string(want) +
                    " exceeds dim S_" + std::to_string(d) + " = " + std::to_string(dim_sd));
        std::vector<Monomial> all = monomials_of_degree(ctx.n, d); // descending lex
        std::vector<Monomial> segment(all.begin(), all.begin() + want);

        // the shadow m * L_{d-1} must sit inside the segment
        std::vector<Monomial> shadow;
        for (const auto& u : prev_segment)
            for (int i = 0; i < ctx.n; ++i) shadow.push_back(u.times_var(i));
        std::sort(shadow.begin(), shadow.end(), [](const Monomial& a, const Monomial& b) {
            return compare(TermOrder::lex, a, b) > 0;
        });
        shadow.erase(std::unique(shadow.begin(), shadow.end()), shadow.end());
        require(static_cast<long>(shadow.size()) <= want, errc::input,
                "not an O-sequence: lex segment growth fails at degree " + std::to_string(d));
        for (std::size_t k = 0; k < shadow.size(); ++k)
            require(shadow[k] == segment[k], errc::internal,
                    "lex shadow is not an initial segment"); // cannot happen for lex segments
        for (std::size_t k = shadow.size(); k < segment.size(); ++k) {
            gens.push_back(segment[k]);
            last_new_gen_degree = d;
        }
        prev_segment = std::move(segment);
    }
    require(last_new_gen_degree <= D - 2, errc::window,
            "Hilbert function window too short: lex generators still appear in degree " +
                std::to_string(last_new_gen_degree));
    return MonomialIdeal::from_monomials(ctx, std::move(gens));
}

AnnihilatorProfile alpha_from_stable(const MonomialIdeal& I) {
    require(is_stable(I), errc::input, "annihilator shortcut needs a stable ideal");
    int n = I.ctx().n;
    MStats st = m_stats(I);
    AnnihilatorProfile prof;
    prof.alpha.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        prof.alpha[static_cast<std::size_t>(i)] = st.m[static_cast<std::size_t>(n - i + 1)];
    prof.degree_window = std::max(0, I.max_degree());
    prof.certified = true;
    return prof;
}

} // namespace ginlab
