#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "weylpoly/operator_poly.hpp"
#include "support/generators.hpp"

using weylpoly::commutator;
using weylpoly::GradePoly;
using weylpoly::op_power;
using weylpoly::OperatorPoly;
using weylpoly::QuadScalar;
using weylpoly::Rational;

namespace {
const OperatorPoly X = OperatorPoly::x();
const OperatorPoly P = OperatorPoly::p();
const QuadScalar I = QuadScalar::i();

OperatorPoly two_i_x() { return X * (I * QuadScalar(Rational(2))); }
}  // namespace

TEST_CASE("reordering single words", "[operator]") {
    // p·x = x·p − i
    CHECK(P * X == X * P - OperatorPoly(I));
    // x·p is already normal ordered
    CHECK((X * P).coeff(1, 1).at(0) == QuadScalar::one());
    CHECK((X * P).terms().size() == 1);
    // p²·x = x·p² − 2i·p
    CHECK(P * P * X == X * P * P - P * (I * QuadScalar(Rational(2))));
    // p·x² = x²·p − 2i·x
    CHECK(P * (X * X) == X * X * P - X * (I * QuadScalar(Rational(2))));
}

TEST_CASE("commutators", "[operator]") {
    CHECK(commutator(X, P) == OperatorPoly(I));
    CHECK(commutator(X, X * X).is_zero());
    CHECK(commutator(X * X, P) == two_i_x());
}

TEST_CASE("powers of the Hermite generator", "[operator]") {
    const OperatorPoly gen = P + two_i_x();
    CHECK(op_power(gen, 0) == OperatorPoly::one());
    CHECK(op_power(gen, 1) == gen);

    // (p+2ix)² = p² + 4i·x·p − 4x² + 2
    const OperatorPoly sq = op_power(gen, 2);
    CHECK(sq == P * P + X * P * (I * QuadScalar(Rational(4))) -
                    X * X * QuadScalar(Rational(4)) + OperatorPoly(QuadScalar(Rational(2))));
    CHECK(sq == gen * gen);
}

TEST_CASE("product is associative on random operators", "[operator]") {
    std::mt19937 rng(20260814);
    for (int rep = 0; rep < 25; ++rep) {
        const OperatorPoly a = testsupport::random_operator_poly(rng, 6, 6);
        const OperatorPoly b = testsupport::random_operator_poly(rng, 6, 6);
        const OperatorPoly c = testsupport::random_operator_poly(rng, 6, 6);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("normal ordering is canonical across association orders", "[operator]") {
    // The same abstract word p·x·p·x associated three ways.
    const OperatorPoly w1 = ((P * X) * P) * X;
    const OperatorPoly w2 = P * (X * (P * X));
    const OperatorPoly w3 = (P * X) * (P * X);
    CHECK(w1 == w2);
    CHECK(w2 == w3);
}

TEST_CASE("commutator is bilinear and antisymmetric", "[operator]") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        const OperatorPoly a = testsupport::random_operator_poly(rng, 4, 5);
        const OperatorPoly b = testsupport::random_operator_poly(rng, 4, 5);
        const OperatorPoly c = testsupport::random_operator_poly(rng, 4, 5);
        const QuadScalar s = testsupport::random_scalar(rng);
        const QuadScalar t = testsupport::random_scalar(rng);
        CHECK(commutator(a * s + b * t, c) == commutator(a, c) * s + commutator(b, c) * t);
        CHECK(commutator(a, b) == -commutator(b, a));
    }
}

TEST_CASE("Jacobi identity on random triples", "[operator]") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 15; ++rep) {
        const OperatorPoly a = testsupport::random_operator_poly(rng, 4, 4);
        const OperatorPoly b = testsupport::random_operator_poly(rng, 4, 4);
        const OperatorPoly c = testsupport::random_operator_poly(rng, 4, 4);
        const OperatorPoly jacobi = commutator(a, commutator(b, c)) +
                                    commutator(b, commutator(c, a)) +
                                    commutator(c, commutator(a, b));
        CHECK(jacobi.is_zero());
    }
}

TEST_CASE("graded coefficients", "[operator]") {
    const OperatorPoly a =
        OperatorPoly::monomial(1, 0, GradePoly::monomial(1, QuadScalar(Rational(2))));
    CHECK(a.min_grade() == 1);
    CHECK_FALSE(a.grade_zero_only());

    const OperatorPoly sq = a * a;  // 4t²·x²
    CHECK(sq.min_grade() == 2);
    CHECK(sq.coeff(2, 0).at(2) == QuadScalar(Rational(4)));
    CHECK(sq.truncated_grades(1).is_zero());
    CHECK(sq.truncated_grades(2) == sq);

    const OperatorPoly part = sq.grade_component(2);
    CHECK(part.grade_zero_only());
    CHECK(part.coeff(2, 0).at(0) == QuadScalar(Rational(4)));
    CHECK(sq.grade_component(1).is_zero());
}

TEST_CASE("zero handling keeps representation unique", "[operator]") {
    const OperatorPoly z = X * P - X * P;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK_FALSE(z.total_degree().has_value());
    CHECK((X * QuadScalar()).is_zero());
}
