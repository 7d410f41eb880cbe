#pragma once

#include <cstddef>
#include <stdexcept>

#include "weylpoly/bivariate_poly.hpp"
#include "weylpoly/operator_calculus.hpp"
#include "weylpoly/operator_poly.hpp"
#include "weylpoly/univariate_poly.hpp"
#include "weylpoly/weighted_poly.hpp"

namespace weylpoly {

/// H_n via the Rodrigues form e^{x²} dⁿ/dxⁿ e^{−x²}: differentiate the
/// weighted polynomial n times and flip the sign for odd n.
inline UnivariatePoly hermite_rodrigues(std::size_t n) {
    GaussWeightedPoly w;
    for (std::size_t k = 0; k < n; ++k) {
        w = w.derivative();
    }
    return n % 2 == 0 ? w.q() : -w.q();
}

/// H_n via the operator form (−i)ⁿ(p + 2ix)ⁿ acting on the constant 1.
/// The imaginary and √2 parts cancel exactly; anything left over is a bug.
inline UnivariatePoly hermite_operator(std::size_t n) {
    static const OperatorPoly generator =
        OperatorPoly::p() + OperatorPoly::x() * (QuadScalar::i() * QuadScalar(Rational(2)));
    UnivariatePoly out =
        apply_to_constant(op_power(generator, n)) * QuadScalar::i_power(-static_cast<long>(n));
    if (!out.is_pure_rational()) {
        throw std::logic_error("hermite_operator: residual non-rational component");
    }
    return out;
}

/// Classical oracle H_{n+1} = 2x·H_n − 2n·H_{n−1}; independent ground truth,
/// not derived from the operator algebra.
inline UnivariatePoly hermite_recurrence(std::size_t n) {
    UnivariatePoly prev(1);
    if (n == 0) {
        return prev;
    }
    UnivariatePoly cur = UnivariatePoly::monomial(1, QuadScalar(Rational(2)));
    for (std::size_t k = 1; k < n; ++k) {
        UnivariatePoly next = cur.shifted(1) * QuadScalar(Rational(2)) -
                              prev * QuadScalar(Rational(2 * static_cast<long>(k)));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// H_n(x+y) as an exact bivariate polynomial, by binomial substitution into
/// the operator-route coefficients.
inline BivariatePoly hermite_bivariate_shift(std::size_t n) {
    return BivariatePoly::compose_x_plus_y(hermite_operator(n));
}

/// The convolution side of the addition theorem with an injectable prefactor;
/// the identity requires prefactor = 2^{−n/2}.
inline BivariatePoly hermite_addition_rhs(std::size_t n, const QuadScalar& prefactor) {
    BivariatePoly sum;
    for (std::size_t k = 0; k <= n; ++k) {
        const BivariatePoly left = BivariatePoly::from_univariate_x(
            hermite_operator(k).compose_scaled(QuadScalar::sqrt2()));
        const BivariatePoly right = BivariatePoly::from_univariate_y(
            hermite_operator(n - k).compose_scaled(QuadScalar::sqrt2()));
        sum += left * right * QuadScalar(Rational(binomial_z(
                   static_cast<unsigned long>(n), static_cast<unsigned long>(k))));
    }
    return sum * prefactor;
}

/// 2^{−n/2} Σ_k C(n,k) H_k(√2·x) H_{n−k}(√2·y). For odd n the prefactor is a
/// pure √2 component; all √2 and imaginary parts must cancel in the total.
inline BivariatePoly hermite_addition_rhs(std::size_t n) {
    return hermite_addition_rhs(n, QuadScalar::sqrt2_power(-static_cast<long>(n)));
}

}  // namespace weylpoly
