#ifndef GINLAB_GROEBNER_HPP
#define GINLAB_GROEBNER_HPP

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ginlab/monideal.hpp"
#include "ginlab/ring.hpp"

namespace ginlab {

constexpr int kDefaultDegreeGuard = 40;

// Ideal presented by homogeneous generators (not necessarily minimal).
struct GradedIdeal {
    RingCtx ctx;
    std::vector<Polynomial> gens;

    static GradedIdeal make(RingCtx ctx, std::vector<Polynomial> gens);
    static GradedIdeal from_monomial_ideal(const MonomialIdeal& I);
    bool is_zero() const { return gens.empty(); }
    int min_gen_degree() const; // -1 when zero
};

// When every generator is a single term, the underlying monomial ideal.
std::optional<MonomialIdeal> as_monomial_ideal(const GradedIdeal& I);

// Reduced Groebner basis: monic, interreduced, pairwise non-dividing leading
// monomials, sorted descending by leading monomial.
struct GroebnerBasis {
    RingCtx ctx;
    TermOrder order = TermOrder::degrevlex;
    std::vector<Polynomial> elements;
    std::vector<Polynomial> source;

    MonomialIdeal leading_ideal() const;
};

// Full division: no term of the result is divisible by a leading monomial of
// gb, and f - result lies in the ideal. Linear in f and idempotent.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger with the normal pair-selection strategy (lowest lcm degree, ties
// by order on the lcm, then by pair index) and both classical criteria.
// Deterministic. The degree guard aborts with errc::resource.
GroebnerBasis buchberger(const GradedIdeal& I, TermOrder order,
                         int degree_guard = kDefaultDegreeGuard);

MonomialIdeal initial_ideal(const GradedIdeal& I, TermOrder order,
                            int degree_guard = kDefaultDegreeGuard);

// Degree-d monomials outside J, descending in `order`.
std::vector<Monomial> std_monomials(const MonomialIdeal& J, int d,
                                    TermOrder order = TermOrder::degrevlex);

// dim_K (S/J)_d for d = 0..d_max, by complement enumeration.
std::vector<long> hilbert_function(const MonomialIdeal& J, int d_max);

// Polynomial in d with rational coefficients; coeffs[k] multiplies d^k.
struct HilbertPolynomial {
    std::vector<mpq_class> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    mpq_class eval(long d) const;
    bool operator==(const HilbertPolynomial& o) const { return coeffs == o.coeffs; }
    std::string str() const;
};

// Hilbert polynomial of S/J, interpolated from hilbert_function at degrees
// reg_bound+1 .. reg_bound+n and verified at reg_bound+n+1. reg_bound must be
// at least the regularity of S/J; the overload picks max generator degree for
// stable J and the lcm-degree bound otherwise.
HilbertPolynomial hilbert_polynomial(const MonomialIdeal& J, int reg_bound);
HilbertPolynomial hilbert_polynomial(const MonomialIdeal& J);

} // namespace ginlab

#endif
