#ifndef GINLAB_FIELD_HPP
#define GINLAB_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

#include "ginlab/error.hpp"

namespace ginlab {

enum class FieldKind { rationals, prime_field };

class Scalar;

// The coefficient field: Q, or F_p for an odd prime p fitting a machine word.
// Prime fields are a fast desk-scale surrogate; characteristic-0 theorems used
// over F_p are flagged by the CLI, not certified here.
//
// FieldSpec doubles as the arithmetic context (manager idiom): every Scalar
// operation goes through it so residues and fractions never mix silently.
struct FieldSpec {
    FieldKind kind = FieldKind::rationals;
    long characteristic = 0; // 0 for Q, p for F_p

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && characteristic == o.characteristic;
    }

    static FieldSpec rationals() { return FieldSpec{FieldKind::rationals, 0}; }
    static FieldSpec prime(long p); // validates primality

    bool is_rationals() const { return kind == FieldKind::rationals; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_long(long v) const;
    Scalar from_mpz(const mpz_class& v) const;
    Scalar fraction(const mpz_class& num, const mpz_class& den) const; // den != 0

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar div(const Scalar& a, const Scalar& b) const; // b != 0
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const; // a != 0

    bool is_zero(const Scalar& a) const;
    bool is_one(const Scalar& a) const;
    bool eq(const Scalar& a, const Scalar& b) const;

    std::string str(const Scalar& a) const; // "a/b" over Q, residue over F_p
    std::string name() const;               // "Q" or "Fp:<p>"
};

// One exact field element. Rationals are kept in lowest terms with positive
// denominator (GMP canonical form); residues live in [0, p).
class Scalar {
public:
    Scalar() = delete; // always construct through a FieldSpec

private:
    friend struct FieldSpec;
    explicit Scalar(long r) : v_(r) {}
    explicit Scalar(mpq_class q) : v_(std::move(q)) {}

    long residue() const { return std::get<long>(v_); }
    const mpq_class& rat() const { return std::get<mpq_class>(v_); }

    std::variant<long, mpq_class> v_;
};

bool is_prime_long(long p);

} // namespace ginlab

#endif
