#include "ginlab/field.hpp"

namespace ginlab {

namespace {

long mulmod(long a, long b, long p) {
    return static_cast<long>(static_cast<__int128>(a) * b % p);
}

long powmod(long a, long e, long p) {
    long r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// extended Euclid: inverse of a mod p, 0 < a < p
long invmod(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        long q = r / new_r;
        long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    require(r == 1, errc::internal, "invmod: argument not a unit");
    return t < 0 ? t + p : t;
}

long normalize_residue(long v, long p) {
    long r = v % p;
    return r < 0 ? r + p : r;
}

long mpz_residue(const mpz_class& v, long p) {
    mpz_class m = v % p;
    long r = m.get_si();
    return r < 0 ? r + p : r;
}

} // namespace

bool is_prime_long(long p) {
    if (p < 2) return false;
    for (long q : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        if (p == q) return true;
        if (p % q == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    long d = p - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (long a : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L}) {
        long x = powmod(a, d, p);
        if (x == 1 || x == p - 1) continue;
        bool witness = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod(x, x, p);
            if (x == p - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime(long p) {
    require(p >= 3 && p % 2 == 1, errc::input, "prime field characteristic must be an odd prime");
    require(p < (1L << 62), errc::input, "prime field characteristic must fit a machine word");
    require(is_prime_long(p), errc::input, "characteristic " + std::to_string(p) + " is not prime");
    return FieldSpec{FieldKind::prime_field, p};
}

Scalar FieldSpec::zero() const {
    return is_rationals() ? Scalar(mpq_class(0)) : Scalar(0L);
}

Scalar FieldSpec::one() const {
    return is_rationals() ? Scalar(mpq_class(1)) : Scalar(1L);
}

Scalar FieldSpec::from_long(long v) const {
    if (is_rationals()) return Scalar(mpq_class(static_cast<signed long>(v)));
    return Scalar(normalize_residue(v, characteristic));
}

Scalar FieldSpec::from_mpz(const mpz_class& v) const {
    if (is_rationals()) return Scalar(mpq_class(v));
    return Scalar(mpz_residue(v, characteristic));
}

Scalar FieldSpec::fraction(const mpz_class& num, const mpz_class& den) const {
    require(den != 0, errc::input, "fraction with zero denominator");
    if (is_rationals()) {
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(std::move(q));
    }
    long d = mpz_residue(den, characteristic);
    require(d != 0, errc::input, "fraction denominator vanishes mod p");
    return Scalar(mulmod(mpz_residue(num, characteristic), invmod(d, characteristic), characteristic));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return Scalar(mpq_class(a.rat() + b.rat()));
    return Scalar(normalize_residue(a.residue() + b.residue(), characteristic));
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return Scalar(mpq_class(a.rat() - b.rat()));
    return Scalar(normalize_residue(a.residue() - b.residue(), characteristic));
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    if (is_rationals()) return Scalar(mpq_class(a.rat() * b.rat()));
    return Scalar(mulmod(a.residue(), b.residue(), characteristic));
}

Scalar FieldSpec::div(const Scalar& a, const Scalar& b) const {
    require(!is_zero(b), errc::internal, "division by zero scalar");
    if (is_rationals()) return Scalar(mpq_class(a.rat() / b.rat()));
    return Scalar(mulmod(a.residue(), invmod(b.residue(), characteristic), characteristic));
}

Scalar FieldSpec::neg(const Scalar& a) const {
    if (is_rationals()) return Scalar(mpq_class(-a.rat()));
    return Scalar(a.residue() == 0 ? 0 : characteristic - a.residue());
}

Scalar FieldSpec::inv(const Scalar& a) const {
    require(!is_zero(a), errc::internal, "inverse of zero scalar");
    if (is_rationals()) return Scalar(mpq_class(1 / a.rat()));
    return Scalar(invmod(a.residue(), characteristic));
}

bool FieldSpec::is_zero(const Scalar& a) const {
    return is_rationals() ? a.rat() == 0 : a.residue() == 0;
}

bool FieldSpec::is_one(const Scalar& a) const {
    return is_rationals() ? a.rat() == 1 : a.residue() == 1;
}

bool FieldSpec::eq(const Scalar& a, const Scalar& b) const {
    return is_rationals() ? a.rat() == b.rat() : a.residue() == b.residue();
}

std::string FieldSpec::str(const Scalar& a) const {
    if (is_rationals()) return a.rat().get_str();
    return std::to_string(a.residue());
}

std::string FieldSpec::name() const {
    return is_rationals() ? "Q" : "Fp:" + std::to_string(characteristic);
}

} // namespace ginlab
