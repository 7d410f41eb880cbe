#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "weylpoly/rational.hpp"
#include "weylpoly/univariate_poly.hpp"
#include "weylpoly/weighted_poly.hpp"

namespace weylpoly {

/// The order superscript of L_n^α; any exact rational is admissible.
struct LaguerreOrder {
    Rational alpha;

    explicit LaguerreOrder(Rational a) : alpha(std::move(a)) {}
    explicit LaguerreOrder(long a) : alpha(a) {}
};

/// ff(γ, m) = γ(γ−1)⋯(γ−m+1); the finite-product reading of the factorial
/// ratio γ!/(γ−m)!, defined for every rational γ. ff(γ, 0) = 1.
inline Rational falling_factorial(const Rational& gamma, std::size_t m) {
    Rational out(1);
    Rational term = gamma;
    for (std::size_t j = 0; j < m; ++j) {
        out *= term;
        term -= Rational(1);
    }
    return out;
}

/// gbinom(γ, m) = ff(γ, m)/m!, the generalized binomial coefficient.
inline Rational generalized_binomial(const Rational& gamma, std::size_t m) {
    return falling_factorial(gamma, m) / Rational(factorial_z(static_cast<unsigned long>(m)));
}

/// L_n^α via the expanded operator form x^{−α}(d/dx − 1)ⁿ x^{n+α}:
/// (1/n!) Σ_m C(n,m)(−1)^{n−m} ff(n+α, m) x^{n−m}.
inline UnivariatePoly laguerre_operator(std::size_t n, const LaguerreOrder& order) {
    const Rational np_alpha = Rational(static_cast<long>(n)) + order.alpha;
    const Rational inv_nfact =
        Rational(1) / Rational(factorial_z(static_cast<unsigned long>(n)));
    UnivariatePoly out;
    for (std::size_t m = 0; m <= n; ++m) {
        Rational c = Rational(binomial_z(static_cast<unsigned long>(n),
                                         static_cast<unsigned long>(m))) *
                     falling_factorial(np_alpha, m) * inv_nfact;
        if ((n - m) % 2 == 1) {
            c = -c;
        }
        out += UnivariatePoly::monomial(n - m, QuadScalar(c));
    }
    return out;
}

/// L_n^α via the closed sum Σ_k gbinom(n+α, n−k)(−1)^k x^k/k!.
inline UnivariatePoly laguerre_sum(std::size_t n, const LaguerreOrder& order) {
    const Rational np_alpha = Rational(static_cast<long>(n)) + order.alpha;
    UnivariatePoly out;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational c = generalized_binomial(np_alpha, n - k) /
                     Rational(factorial_z(static_cast<unsigned long>(k)));
        if (k % 2 == 1) {
            c = -c;
        }
        out += UnivariatePoly::monomial(k, QuadScalar(c));
    }
    return out;
}

/// L_n^α via symbolic Rodrigues differentiation of x^{n+α}e^{−x}. After n
/// derivatives the weighted form sits exactly at base exponent α, so the
/// x^{−α} shift lands on integer powers; any residue is a bug, not an input
/// error.
inline UnivariatePoly laguerre_rodrigues(std::size_t n, const LaguerreOrder& order) {
    LaguerreWeightedPoly w =
        LaguerreWeightedPoly::weight_power(Rational(static_cast<long>(n)) + order.alpha);
    for (std::size_t k = 0; k < n; ++k) {
        w = w.derivative();
    }
    if (w.gamma() != order.alpha) {
        throw std::logic_error("laguerre_rodrigues: base exponent mismatch after stripping");
    }
    return w.strip_weight() *
           QuadScalar(Rational(1) / Rational(factorial_z(static_cast<unsigned long>(n))));
}

}  // namespace weylpoly
