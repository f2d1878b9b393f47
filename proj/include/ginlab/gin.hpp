#ifndef GINLAB_GIN_HPP
#define GINLAB_GIN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ginlab/groebner.hpp"

namespace ginlab {

struct GinOptions {
    int trials = 3;
    long entry_bound = 1000; // coordinates drawn uniformly from [-B, B]
    int degree_guard = kDefaultDegreeGuard;
};

struct GinResult {
    MonomialIdeal ideal;
    TermOrder order;
    int trials;
    std::uint64_t seed;
    bool agreed;
    std::vector<std::string> warnings;
};

// Gin(I) by repeated random coordinate change: `trials` independent dense
// invertible changes must give the same initial ideal, otherwise
// errc::genericity is thrown (re-seed or raise the bound). Over Q the result
// is additionally checked strongly stable; a warning is attached when not.
GinResult generic_initial_ideal(const GradedIdeal& I, TermOrder order, std::uint64_t seed,
                                const GinOptions& opts = {});

// Rows of one seeded random invertible matrix, as linear forms. The same seed
// yields the same matrix for every count.
std::vector<Polynomial> generic_linear_forms(const RingCtx& ctx, int count, std::uint64_t seed,
                                             long entry_bound = 100);

LinearChange random_invertible_change(const RingCtx& ctx, std::uint64_t seed, long entry_bound);

} // namespace ginlab

#endif
