#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "weylpoly/laguerre.hpp"
#include "support/oracles.hpp"

using namespace weylpoly;

namespace {
UnivariatePoly upoly(std::initializer_list<Rational> coeffs) {
    std::vector<QuadScalar> v;
    for (const Rational& c : coeffs) v.emplace_back(c);
    return UnivariatePoly(v);
}

void check_all_methods(std::size_t n, const LaguerreOrder& order,
                       const UnivariatePoly& expected) {
    CAPTURE(n, order.alpha.to_string());
    CHECK(laguerre_operator(n, order) == expected);
    CHECK(laguerre_sum(n, order) == expected);
    CHECK(laguerre_rodrigues(n, order) == expected);
}
}  // namespace

TEST_CASE("falling factorials and generalized binomials", "[laguerre]") {
    CHECK(falling_factorial(Rational(5), 0) == Rational(1));
    CHECK(falling_factorial(Rational(5), 2) == Rational(20));
    CHECK(falling_factorial(Rational(1, 2), 3) == Rational(3, 8));
    CHECK(falling_factorial(Rational(-1), 2) == Rational(2));

    CHECK(generalized_binomial(Rational(5), 2) == Rational(10));
    CHECK(generalized_binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(generalized_binomial(Rational(7, 3), 0) == Rational(1));
}

TEST_CASE("low-degree table agrees across all three generators", "[laguerre]") {
    check_all_methods(0, LaguerreOrder(Rational(0)), upoly({Rational(1)}));
    check_all_methods(1, LaguerreOrder(Rational(0)), upoly({Rational(1), Rational(-1)}));
    check_all_methods(2, LaguerreOrder(Rational(0)),
                      upoly({Rational(1), Rational(-2), Rational(1, 2)}));
    check_all_methods(1, LaguerreOrder(Rational(1)), upoly({Rational(2), Rational(-1)}));
    check_all_methods(2, LaguerreOrder(Rational(1)),
                      upoly({Rational(3), Rational(-3), Rational(1, 2)}));
    check_all_methods(2, LaguerreOrder(Rational(1, 2)),
                      upoly({Rational(15, 8), Rational(-5, 2), Rational(1, 2)}));
    check_all_methods(1, LaguerreOrder(Rational(-1, 3)),
                      upoly({Rational(2, 3), Rational(-1)}));
}

TEST_CASE("three generators agree across orders", "[laguerre]") {
    const std::vector<LaguerreOrder> orders = {
        LaguerreOrder(Rational(0)),  LaguerreOrder(Rational(1)),
        LaguerreOrder(Rational(5)),  LaguerreOrder(Rational(1, 2)),
        LaguerreOrder(Rational(-1, 3)), LaguerreOrder(Rational(7, 3)),
    };
    for (std::size_t n = 0; n <= 15; ++n) {
        for (const LaguerreOrder& order : orders) {
            CAPTURE(n, order.alpha.to_string());
            const UnivariatePoly ref = laguerre_sum(n, order);
            CHECK(laguerre_operator(n, order) == ref);
            CHECK(laguerre_rodrigues(n, order) == ref);
        }
    }
}

TEST_CASE("structural invariants", "[laguerre]") {
    const LaguerreOrder half(Rational(1, 2));
    for (std::size_t n = 0; n <= 15; ++n) {
        CAPTURE(n);
        const UnivariatePoly l = laguerre_sum(n, half);
        REQUIRE(l.degree() == n);
        // leading coefficient (−1)ⁿ/n!, constant term C(n+α, n)
        Rational lead = Rational(1) / factorial(static_cast<unsigned long>(n));
        if (n % 2 == 1) lead = -lead;
        CHECK(l.leading_coeff() == QuadScalar(lead));
        CHECK(l.coeff(0) ==
              QuadScalar(generalized_binomial(Rational(static_cast<long>(n)) + half.alpha, n)));
        CHECK(l.is_pure_rational());
    }
}

TEST_CASE("agreement with the three-term recurrence", "[laguerre]") {
    const std::vector<Rational> alphas = {Rational(0), Rational(2), Rational(1, 2),
                                          Rational(-1, 3)};
    for (std::size_t n = 0; n <= 12; ++n) {
        for (const Rational& alpha : alphas) {
            CAPTURE(n, alpha.to_string());
            CHECK(laguerre_sum(n, LaguerreOrder(alpha)) ==
                  testsupport::laguerre_recurrence_oracle(n, alpha));
        }
    }
}
