#ifndef GINLAB_RING_HPP
#define GINLAB_RING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ginlab/field.hpp"
#include "ginlab/matrix.hpp"

namespace ginlab {

// Hard cap on the number of variables; keeps monomials allocation-free.
constexpr int kMaxVars = 8;

// Ambient graded polynomial ring K[x1..xn], deg xi = 1. The graded maximal
// ideal is implicit: all variables.
struct RingCtx {
    int n = 0;
    FieldSpec field;
    std::vector<std::string> var_names; // defaults to x1..xn
    int max_degree = 64;                // exponent overflow guard

    static RingCtx make(int n, FieldSpec field, std::vector<std::string> names = {});

    const std::string& var(int i) const { return var_names[static_cast<std::size_t>(i)]; }
    int var_index(const std::string& name) const; // -1 when unknown
    bool compatible(const RingCtx& o) const { return n == o.n && field == o.field; }
};

// Exponent vector with cached total degree. Variable indices are 0-based in
// code; printed names are 1-based (x1..xn).
class Monomial {
public:
    static Monomial one(int n);
    static Monomial variable(int n, int i);
    static Monomial from_exponents(const std::vector<int>& e);

    int vars() const { return n_; }
    int degree() const { return deg_; }
    int exponent(int i) const { return e_[static_cast<std::size_t>(i)]; }
    bool is_one() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    Monomial times_var(int i, int k = 1) const;
    bool divides(const Monomial& o) const;      // this | o
    Monomial div_exact(const Monomial& o) const; // this / o, o | this required
    Monomial lcm_with(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return n_ == o.n_ && e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    // container ordering only; not a term order
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    Monomial() = default;
    std::array<std::uint16_t, kMaxVars> e_{};
    int n_ = 0;
    int deg_ = 0;
};

// Largest 1-based index of a variable dividing u; 0 for the constant monomial.
int max_index(const Monomial& u);

enum class TermOrder { degrevlex, deglex, lex };

// -1 / 0 / +1 for a < b / a == b / a > b. All three orders use x1 > x2 > ... > xn;
// degrevlex and deglex refine total degree.
int compare(TermOrder order, const Monomial& a, const Monomial& b);

const char* order_name(TermOrder order);
TermOrder order_from_name(const std::string& name);

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Sorted term list (descending in `order`), no zero coefficients, no duplicate
// monomials. The attached order is part of the canonical form.
class Polynomial {
public:
    explicit Polynomial(TermOrder order = TermOrder::degrevlex) : order_(order) {}
    static Polynomial from_terms(const RingCtx& ctx, TermOrder order, std::vector<Term> terms);

    TermOrder order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Term& leading() const;

    int degree() const;        // max term degree, -1 for 0
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

private:
    std::vector<Term> terms_;
    TermOrder order_;
};

Polynomial poly_zero(TermOrder order);
Polynomial poly_monomial(const RingCtx& ctx, TermOrder order, const Monomial& m, const Scalar& c);
Polynomial poly_variable(const RingCtx& ctx, TermOrder order, int i);

Polynomial poly_add(const RingCtx& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_sub(const RingCtx& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_neg(const RingCtx& ctx, const Polynomial& f);
Polynomial poly_scale(const RingCtx& ctx, const Polynomial& f, const Scalar& c);
// f * c*u, the division-step workhorse
Polynomial poly_mul_term(const RingCtx& ctx, const Polynomial& f, const Monomial& u, const Scalar& c);
Polynomial poly_mul(const RingCtx& ctx, const Polynomial& f, const Polynomial& g);
Polynomial poly_pow(const RingCtx& ctx, const Polynomial& f, int k);
Polynomial with_order(const RingCtx& ctx, const Polynomial& f, TermOrder order);
bool poly_eq(const RingCtx& ctx, const Polynomial& f, const Polynomial& g);

// Invertible linear coordinate change; row i gives the image of xi.
struct LinearChange {
    DenseMatrix matrix;

    static LinearChange make(const RingCtx& ctx, DenseMatrix m); // rejects singular m
    LinearChange inverted() const;
};

// Substitutes xi -> sum_j matrix(i,j) xj in f. Homogeneous in, homogeneous out.
Polynomial apply_change(const RingCtx& ctx, const Polynomial& f, const LinearChange& g);

// All degree-d monomials in n variables, descending pure-lex order.
std::vector<Monomial> monomials_of_degree(int n, int d);
long count_monomials(int n, int d); // dim of the degree-d piece of S

std::string monomial_to_string(const RingCtx& ctx, const Monomial& m);
std::string poly_to_string(const RingCtx& ctx, const Polynomial& f);

long binomial(long n, long k); // 0 when k < 0 or k > n

} // namespace ginlab

#endif
