#ifndef GINLAB_MONIDEAL_HPP
#define GINLAB_MONIDEAL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ginlab/ring.hpp"

namespace ginlab {

// Monomial ideal held by its unique minimal generating set G(I), canonically
// sorted (degree first, then descending degrevlex).
class MonomialIdeal {
public:
    static MonomialIdeal from_monomials(const RingCtx& ctx, std::vector<Monomial> mons);
    static MonomialIdeal zero(const RingCtx& ctx);
    static MonomialIdeal power_of_maxideal(const RingCtx& ctx, int d);

    const RingCtx& ctx() const { return ctx_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& u) const; // divisibility by some generator
    int min_degree() const;                 // min generator degree, -1 when zero
    int max_degree() const;                 // max generator degree, -1 when zero

    bool operator==(const MonomialIdeal& o) const { return gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    std::string str() const;

private:
    explicit MonomialIdeal(RingCtx ctx) : ctx_(std::move(ctx)) {}
    RingCtx ctx_;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of the input, canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> mons);

// m_i(I) = #{u in G(I) : m(u) = i} and prefix sums, 1-based (index 0 unused).
struct MStats {
    std::vector<long> m;
    std::vector<long> m_le;
};

MStats m_stats(const MonomialIdeal& I);

// Exchange conditions, checked on minimal generators (which suffices).
bool is_stable(const MonomialIdeal& I);
bool is_strongly_stable(const MonomialIdeal& I);

enum class BettiConvention { for_ideal, for_quotient };

// Graded Betti numbers: (homological index i, internal degree j) -> count.
class BettiTable {
public:
    explicit BettiTable(BettiConvention conv) : conv_(conv) {}

    BettiConvention convention() const { return conv_; }
    void add(int i, int j, long count);
    long entry(int i, int j) const;
    long total(int i) const;
    std::vector<long> totals() const; // index 0..max_index
    int max_index() const;            // largest i with a nonzero entry, -1 if empty
    int regularity() const;           // max(j - i) over nonzero entries, 0 if empty
    const std::map<std::pair<int, int>, long>& entries() const { return e_; }

    // beta_{i,j}(I) == beta_{i+1,j}(S/I); the quotient view gains beta_0 = 1 at degree 0
    BettiTable to_ideal_view() const;
    BettiTable to_quotient_view() const;

    bool operator==(const BettiTable& o) const { return conv_ == o.conv_ && e_ == o.e_; }

private:
    std::map<std::pair<int, int>, long> e_;
    BettiConvention conv_;
};

// Eliahou-Kervaire graded Betti numbers of a stable ideal: generator u
// contributes binom(m(u)-1, i) in degree deg(u)+i. Errors when I is not stable.
BettiTable ek_graded_betti(const MonomialIdeal& I);

// Ideal generated by the degree-j piece of I.
MonomialIdeal component_ideal(const MonomialIdeal& I, int j);

// Minimal generators of m*I.
MonomialIdeal times_maxideal(const MonomialIdeal& I);

// Graded Betti table assembled componentwise:
// beta_{i,i+j}(I) = beta_i(I_<j>) - beta_i(m I_<j-1>), each leg by EK.
// Requires every component ideal to be stable.
BettiTable cwl_graded_betti(const MonomialIdeal& I);

// The double sum  sum_{j=d}^{N} sum_{k=i+1}^{n} m_{<=k-1}(I_<j>) binom(k-1, i);
// for strongly stable I with generator degrees inside [d, N] it equals
// beta_i(I_<N+1>) - beta_i(I).
long wonderful_delta(const MonomialIdeal& I, int i, int d, int N);

// Unique lex-segment ideal whose degree-d piece has dimension ideal_hf[d],
// d = 0..D. Validates Macaulay growth degreewise and demands that no new
// generators appear in the last two degrees of the window.
MonomialIdeal lex_segment_ideal(const RingCtx& ctx, const std::vector<long>& ideal_hf);

// Generic annihilator numbers alpha_1..alpha_n (1-based; index 0 unused).
struct AnnihilatorProfile {
    std::vector<long> alpha;
    int degree_window = 0;
    bool certified = false;

    bool same_alpha(const AnnihilatorProfile& o) const { return alpha == o.alpha; }
};

// alpha_i = m_{n-i+1}(I) for stable I.
AnnihilatorProfile alpha_from_stable(const MonomialIdeal& I);

} // namespace ginlab

#endif
