#ifndef GINLAB_KOSZUL_HPP
#define GINLAB_KOSZUL_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ginlab/gin.hpp"
#include "ginlab/groebner.hpp"

namespace ginlab {

// Graded quotient S/I with std-monomial bases per degree (complements of the
// leading-term ideal) and multiplication matrices built through normal forms.
class QuotientRing {
public:
    explicit QuotientRing(GroebnerBasis gb);

    const GroebnerBasis& gb() const { return gb_; }
    const RingCtx& ctx() const { return gb_.ctx; }

    long dim(int d) const;                           // 0 for d < 0
    const std::vector<Monomial>& basis(int d) const; // descending in gb order
    int index_of(int d, const Monomial& u) const;    // -1 when absent

    // coordinates of normal_form(f) in basis(d), f homogeneous of degree d
    SparseVec coords(const Polynomial& f, int d) const;

    // multiplication by x_t : (S/I)_d -> (S/I)_{d+1}, cached
    const SparseMat& var_mult(int t, int d) const;
    // multiplication by a linear form (combination of the variable matrices)
    SparseMat form_mult(const Polynomial& y, int d) const;

private:
    GroebnerBasis gb_;
    MonomialIdeal lt_;
    mutable std::vector<std::vector<Monomial>> basis_;
    mutable std::vector<std::map<Monomial, int>> index_;
    mutable std::vector<std::vector<SparseMat>> var_mult_; // [t][d]
    void extend(int d) const;
};

struct KoszulOptions {
    bool all_prefixes = true; // data for every prefix y_1..y_b, not just b = p
    bool compute_phi = true;  // dim Im of multiplication on homology
    bool compute_ann = true;  // m-annihilation flags
    bool compute_alpha = true;
    int degree_cap = -1; // -1: regularity(I) + n + 2 policy
    int degree_guard = kDefaultDegreeGuard;
};

// Graded Koszul homology data of S/I for the prefixes of a linear-form
// sequence y_1..y_p. All homology dimensions are certified by a trailing-zero
// window: reported homology must vanish in the last two degrees of the cap.
struct KoszulReport {
    int p = 0;
    int degree_cap = 0;
    bool certified = false;

    // h[b][i][d] = dim H_i(y_1..y_b; S/I)_d, 0 <= i <= b <= p, 0 <= d <= cap
    std::vector<std::vector<std::vector<long>>> h;
    // im_phi[b][a] = dim Im(y_{b+1}: H_a(b) -> H_a(b)), 1 <= a <= b <= p-1
    std::vector<std::vector<long>> im_phi;
    // ann[b][i] = (m * H_i(b) == 0), 1 <= i <= b <= p
    std::vector<std::vector<char>> ann;
    // alpha[j] = dim ker(y_j : H_0(j-1) -> H_0(j-1)), 1-based, j <= p
    std::vector<long> alpha;

    long h_total(int b, int i) const;
    const std::vector<long>& h_graded(int b, int i) const;
    long phi_image(int a, int b) const;      // 0 for a > b
    bool m_annihilated(int i, int b) const;  // true for i > b (no homology)
};

// Matrix of multiplication by y : (S/I)_d -> (S/I)_{d+1} in std-monomial bases.
DenseMatrix quotient_multiplication_matrix(const GradedIdeal& I, const Polynomial& y, int d,
                                           TermOrder order = TermOrder::degrevlex);

// The full pipeline. Forms must be linearly independent linear forms.
KoszulReport koszul_homology(const GradedIdeal& I, const std::vector<Polynomial>& forms,
                             const KoszulOptions& opts = {});

// Betti numbers of S/I as Koszul homology of the variable sequence (Tor needs
// no genericity); the result carries the quotient convention.
BettiTable graded_betti_quotient(const GradedIdeal& I);
// Ideal convention: beta_i(I) = beta_{i+1}(S/I).
BettiTable graded_betti(const GradedIdeal& I);

// Castelnuovo-Mumford regularity of I (max j - i over the ideal-convention
// table). The degree window is bootstrapped from gin(I) for non-monomial
// ideals and re-certified by the trailing-zero check.
int regularity(const GradedIdeal& I);

// alpha_p = sum_d dim ker(y_p : Q_d -> Q_{d+1}), Q = S/(I + (y_1..y_{p-1})),
// each Q through a fresh Groebner basis. Independent of the Koszul route.
AnnihilatorProfile annihilator_numbers(const GradedIdeal& I, std::uint64_t seed);

// Kuehl's criterion: y_{p+1} H_1(y_1..y_p; S/I) = 0 for p = 0..n-1.
bool is_proper_sequence(const GradedIdeal& I, std::uint64_t seed);

// Every component ideal I_<j> has a linear resolution, tested honestly via
// graded Betti numbers of the component ideals for j up to regularity(I).
bool is_componentwise_linear(const GradedIdeal& I);

// For each subset A of {1..n} (bitmask key, bit j-1 for y_j): does
// m * H_i(y_A; S/I) vanish? Desk scale: n <= 5.
std::map<unsigned, bool> subset_homology_annihilation(const GradedIdeal& I,
                                                      const std::vector<Polynomial>& y, int i);

} // namespace ginlab

#endif
