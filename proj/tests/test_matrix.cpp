#include <doctest.h>

#include "ginlab/matrix.hpp"
#include "ginlab/rng.hpp"

using namespace ginlab;

namespace {

DenseMatrix from_rows(const FieldSpec& f, std::vector<std::vector<long>> rows) {
    DenseMatrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m.set(r, c, f.from_long(rows[r][c]));
    return m;
}

DenseMatrix random_matrix(const FieldSpec& f, Rng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, f.from_long(rng.range(-5, 5)));
    return m;
}

} // namespace

TEST_CASE("scalar arithmetic over Q and F_p") {
    FieldSpec q = FieldSpec::rationals();
    Scalar half = q.fraction(1, 2);
    Scalar third = q.fraction(mpz_class(2), mpz_class(6));
    CHECK(q.str(third) == "1/3"); // canonical lowest terms
    CHECK(q.str(q.add(half, third)) == "5/6");
    CHECK(q.str(q.fraction(1, -2)) == "-1/2"); // positive denominator

    FieldSpec fp = FieldSpec::prime(32003);
    Scalar a = fp.from_long(-1);
    CHECK(fp.str(a) == "32002");
    CHECK(fp.is_one(fp.mul(a, a)));
    CHECK(fp.is_one(fp.mul(fp.from_long(12345), fp.inv(fp.from_long(12345)))));

    CHECK_THROWS_AS((void)FieldSpec::prime(32001), error); // 3 * 10667
}

TEST_CASE("rank identity, zero, proportional rows") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(rank(DenseMatrix::identity(q, 3)) == 3);
    CHECK(rank(DenseMatrix(q, 2, 3)) == 0);
    CHECK(rank(from_rows(q, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel basis examples") {
    FieldSpec q = FieldSpec::rationals();
    CHECK(kernel_basis(DenseMatrix::identity(q, 2)).cols() == 0);

    DenseMatrix k1 = kernel_basis(from_rows(q, {{1, 1}}));
    REQUIRE(k1.cols() == 1);
    // (1, -1) up to scaling
    CHECK(q.eq(k1.at(1, 0), q.neg(k1.at(0, 0))));

    DenseMatrix k2 = kernel_basis(from_rows(q, {{1, 2}, {2, 4}}));
    REQUIRE(k2.cols() == 1);
    // proportional to (2, -1): first * 1 + second * 2 == 0
    CHECK(q.is_zero(q.add(k2.at(0, 0), q.mul(q.from_long(2), k2.at(1, 0)))));
}

TEST_CASE("solve_membership examples") {
    FieldSpec q = FieldSpec::rationals();
    DenseMatrix id = DenseMatrix::identity(q, 3);
    std::vector<Scalar> v{q.from_long(3), q.from_long(-1), q.from_long(7)};
    auto x = solve_membership(id, v);
    REQUIRE(x.has_value());
    for (int i = 0; i < 3; ++i) CHECK(q.eq((*x)[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(i)]));

    DenseMatrix zero(q, 2, 2);
    CHECK_FALSE(solve_membership(zero, {q.one(), q.zero()}).has_value());

    DenseMatrix col = from_rows(q, {{1}, {2}});
    auto y = solve_membership(col, {q.from_long(2), q.from_long(4)});
    REQUIRE(y.has_value());
    CHECK(q.eq((*y)[0], q.from_long(2)));
}

TEST_CASE("random matrices: rank transpose, rank-nullity, exact solve") {
    for (FieldSpec f : {FieldSpec::rationals(), FieldSpec::prime(101)}) {
        Rng rng(42);
        for (int iter = 0; iter < 25; ++iter) {
            std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
            DenseMatrix m = random_matrix(f, rng, r, c);
            CHECK(rank(m) == rank(m.transpose()));
            DenseMatrix k = kernel_basis(m);
            CHECK(k.cols() == c - rank(m));
            for (std::size_t j = 0; j < k.cols(); ++j) {
                std::vector<Scalar> col(c, f.zero());
                for (std::size_t i = 0; i < c; ++i) col[i] = k.at(i, j);
                for (const Scalar& s : m.apply(col)) CHECK(f.is_zero(s));
            }
            // v in the column span: m * x reproduces v exactly
            std::vector<Scalar> x0(c, f.zero());
            for (std::size_t i = 0; i < c; ++i) x0[i] = f.from_long(rng.range(-4, 4));
            std::vector<Scalar> v = m.apply(x0);
            auto x = solve_membership(m, v);
            REQUIRE(x.has_value());
            std::vector<Scalar> back = m.apply(*x);
            for (std::size_t i = 0; i < r; ++i) CHECK(f.eq(back[i], v[i]));
        }
    }
}

TEST_CASE("inverse round trip") {
    FieldSpec q = FieldSpec::rationals();
    DenseMatrix m = from_rows(q, {{2, 1, 0}, {1, 1, 1}, {0, 3, 1}});
    DenseMatrix mi = inverse(m);
    DenseMatrix prod(q, 3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Scalar s = q.zero();
            for (std::size_t k = 0; k < 3; ++k) s = q.add(s, q.mul(m.at(i, k), mi.at(k, j)));
            prod.set(i, j, s);
        }
    CHECK(prod.equals(DenseMatrix::identity(q, 3)));
    CHECK_THROWS_AS((void)inverse(from_rows(q, {{1, 2}, {2, 4}})), error);
}
