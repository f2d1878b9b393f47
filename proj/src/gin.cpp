#include "ginlab/gin.hpp"

#include "ginlab/rng.hpp"

namespace ginlab {

LinearChange random_invertible_change(const RingCtx& ctx, std::uint64_t seed, long entry_bound) {
    require(entry_bound >= 1, errc::input, "entry bound must be positive");
    std::uint64_t s = seed;
    for (int attempt = 0; attempt < 64; ++attempt) {
        Rng rng(mix_seed(s, 0x6d6174726978ULL));
        DenseMatrix m(ctx.field, static_cast<std::size_t>(ctx.n), static_cast<std::size_t>(ctx.n));
        for (int r = 0; r < ctx.n; ++r)
            for (int c = 0; c < ctx.n; ++c) {
                // a vanishing coordinate is a measure-zero event a generic
                // matrix must not hit; reject zero draws
                long v = 0;
                while (v == 0) v = rng.range(-entry_bound, entry_bound);
                m.set(static_cast<std::size_t>(r), static_cast<std::size_t>(c),
                      ctx.field.from_long(v));
            }
        if (rank(m) == static_cast<std::size_t>(ctx.n)) return LinearChange{std::move(m)};
        s = mix_seed(s, 0x7265647261775ULL); // singular draw: reroll
    }
    throw error(errc::genericity, "could not draw an invertible matrix (bound too small?)");
}

std::vector<Polynomial> generic_linear_forms(const RingCtx& ctx, int count, std::uint64_t seed,
                                             long entry_bound) {
    require(0 <= count && count <= ctx.n, errc::input, "form count must be in [0, n]");
    LinearChange change = random_invertible_change(ctx, seed, entry_bound);
    std::vector<Polynomial> forms;
    for (int i = 0; i < count; ++i) {
        std::vector<Term> terms;
        for (int j = 0; j < ctx.n; ++j) {
            const Scalar& c = change.matrix.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (!ctx.field.is_zero(c)) terms.push_back(Term{Monomial::variable(ctx.n, j), c});
        }
        forms.push_back(Polynomial::from_terms(ctx, TermOrder::degrevlex, std::move(terms)));
    }
    return forms;
}

GinResult generic_initial_ideal(const GradedIdeal& I, TermOrder order, std::uint64_t seed,
                                const GinOptions& opts) {
    require(opts.trials >= 1, errc::input, "need at least one trial");
    const RingCtx& ctx = I.ctx;

    std::vector<MonomialIdeal> results;
    for (int t = 0; t < opts.trials; ++t) {
        LinearChange g = random_invertible_change(ctx, mix_seed(seed, static_cast<std::uint64_t>(t)),
                                                  opts.entry_bound);
        std::vector<Polynomial> moved;
        for (const auto& f : I.gens) moved.push_back(apply_change(ctx, f, g));
        GradedIdeal J = GradedIdeal::make(ctx, std::move(moved));
        results.push_back(initial_ideal(J, order, opts.degree_guard));
    }
    for (int t = 1; t < opts.trials; ++t) {
        require(results[static_cast<std::size_t>(t)] == results[0], errc::genericity,
                "generic initial ideal trials disagree (trial " + std::to_string(t) +
                    "); re-seed or raise the entry bound");
    }

    GinResult out{results[0], order, opts.trials, seed, true, {}};
    if (ctx.field.is_rationals() && !is_strongly_stable(out.ideal)) {
        out.warnings.push_back("agreed initial ideal is not strongly stable; "
                               "the coordinate change was likely not generic");
    }
    if (!ctx.field.is_rationals()) {
        out.warnings.push_back("computed over " + ctx.field.name() +
                               "; characteristic-0 theorems used at your own risk");
    }
    return out;
}

} // namespace ginlab
