#ifndef GINLAB_VERIFIER_HPP
#define GINLAB_VERIFIER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ginlab/koszul.hpp"

namespace ginlab {

// Outcome of one theorem-level check on one instance. Every verdict is
// computed, never assumed; precondition failures yield an explicit
// not-applicable report instead of a vacuous pass.
struct TheoremReport {
    std::string theorem;
    std::string instance;
    std::uint64_t seed = 0;
    FieldSpec field;
    bool not_applicable = false;
    std::string na_reason;
    std::vector<std::pair<std::string, bool>> verdicts;
    std::vector<std::pair<std::string, std::string>> data;
    std::vector<std::string> warnings;

    void verdict(const std::string& name, bool ok) { verdicts.emplace_back(name, ok); }
    void note(const std::string& key, const std::string& value) { data.emplace_back(key, value); }
    bool verdict_value(const std::string& name) const;
    bool passed() const;
};

enum class IdealShape {
    dense_random,
    monomial_random,
    stable_random,
    strongly_stable_random,
    complete_intersection,
};

struct IdealSpec {
    int n = 3;
    FieldSpec field;
    int gen_count = 2;
    int min_degree = 2;
    int max_degree = 3;
    IdealShape shape = IdealShape::monomial_random;
    long coeff_bound = 9;
};

// Deterministic per seed. Stable shapes are produced by exchange-closing
// random monomials; complete intersections are verified against the
// Koszul-complex Hilbert series and redrawn on failure.
GradedIdeal random_ideal(const IdealSpec& spec, std::uint64_t seed);
MonomialIdeal random_monomial_ideal(const IdealSpec& spec, std::uint64_t seed);

// Betti numbers of a monomial ideal: Eliahou-Kervaire when stable, otherwise
// the Koszul/Tor route. Ideal convention.
BettiTable betti_of(const MonomialIdeal& J);

// sum_{j=1}^{p-i+1} binom(p-j, i-1) alpha_j  (alpha 1-based)
long annihilator_bound(int i, int p, const std::vector<long>& alpha);

// Upper bound, exact identity with the phi-image correction, and the
// equality <=> vanishing equivalences, for all 1 <= i <= p <= n.
TheoremReport bound_check(const GradedIdeal& I, std::uint64_t seed);

// Equivalence of: maximal Betti numbers, proper sequence, componentwise
// linear, and beta(I) == beta(Gin I).
TheoremReport maximal_equivalences(const GradedIdeal& I, std::uint64_t seed);

// Tail rigidity: equality beta_i(I) = beta_i(Gin I) propagates upward, and the
// set of indices meeting the annihilator bound is upward closed.
TheoremReport rigidity_check(const GradedIdeal& I, std::uint64_t seed);

// Chains beta(I) <= beta(Gin I) <= beta(J) and tail rigidity for J the
// lex-segment ideal of HF(I) and J a gin under the order tau.
TheoremReport lex_comparison(const GradedIdeal& I, TermOrder tau, std::uint64_t seed);

// Betti comparison of nested componentwise linear ideals with equal Hilbert
// polynomial, including the generic-hyperplane-section equivalence.
TheoremReport lowerbound_check(const GradedIdeal& I, const GradedIdeal& J, std::uint64_t seed);

// beta_0(Gin I) >= binom(n+d-1, d) for m-primary I inside m^d, with equality
// iff I and m^d agree modulo a generic linear form.
TheoremReport strange_check(const GradedIdeal& I, int d, std::uint64_t seed);

// Gins of the monomial versus a random complete intersection of n degree-d
// forms: generator counts and the componentwise Betti comparison.
TheoremReport ci_experiment(int n, int d, const FieldSpec& field, std::uint64_t seed,
                            int degree_guard = kDefaultDegreeGuard);

} // namespace ginlab

#endif
