#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>

#include "weylpoly/quad_scalar.hpp"
#include "weylpoly/rational.hpp"
#include "weylpoly/univariate_poly.hpp"

namespace weylpoly {

/// q(x)·e^{−x²}. Differentiation stays in the family: d/dx maps q to q′ − 2x·q.
class GaussWeightedPoly {
public:
    GaussWeightedPoly() : q_(1) {}
    explicit GaussWeightedPoly(UnivariatePoly q) : q_(std::move(q)) {}

    const UnivariatePoly& q() const { return q_; }

    GaussWeightedPoly derivative() const {
        static const UnivariatePoly two_x =
            UnivariatePoly::monomial(1, QuadScalar(Rational(2)));
        return GaussWeightedPoly(q_.derivative() - two_x * q_);
    }

private:
    UnivariatePoly q_;
};

/// Σ_k c_k · x^{γ+k} · e^{−x} with a fixed fractional offset γ and integer
/// shifts k ≥ 0. Differentiation rebases to γ−1:
///   d/dx (c_k x^{γ+k} e^{−x}) = (γ+k)c_k x^{(γ−1)+k} e^{−x} − c_k x^{(γ−1)+(k+1)} e^{−x},
/// so every shift stays nonnegative.
class LaguerreWeightedPoly {
public:
    LaguerreWeightedPoly(Rational gamma, std::map<std::size_t, QuadScalar> coeffs)
        : gamma_(std::move(gamma)) {
        for (auto& [shift, c] : coeffs) {
            if (!c.is_zero()) {
                coeffs_.emplace(shift, std::move(c));
            }
        }
    }

    static LaguerreWeightedPoly weight_power(Rational gamma) {
        return LaguerreWeightedPoly(std::move(gamma), {{0, QuadScalar::one()}});
    }

    const Rational& gamma() const { return gamma_; }
    const std::map<std::size_t, QuadScalar>& coeffs() const { return coeffs_; }

    LaguerreWeightedPoly derivative() const {
        std::map<std::size_t, QuadScalar> out;
        auto add = [&out](std::size_t shift, const QuadScalar& v) {
            auto it = out.find(shift);
            if (it == out.end()) {
                out.emplace(shift, v);
                return;
            }
            it->second += v;
            if (it->second.is_zero()) {
                out.erase(it);
            }
        };
        for (const auto& [shift, c] : coeffs_) {
            const Rational exponent = gamma_ + Rational(static_cast<long>(shift));
            add(shift, c * QuadScalar(exponent));
            add(shift + 1, -c);
        }
        return LaguerreWeightedPoly(gamma_ - Rational(1), std::move(out));
    }

    /// Strip the e^{−x} weight and the x^gamma prefactor, leaving the
    /// polynomial Σ_k c_k x^k. Valid only because shifts are integers ≥ 0.
    UnivariatePoly strip_weight() const {
        UnivariatePoly out;
        for (const auto& [shift, c] : coeffs_) {
            out += UnivariatePoly::monomial(shift, c);
        }
        return out;
    }

private:
    Rational gamma_;
    std::map<std::size_t, QuadScalar> coeffs_;
};

}  // namespace weylpoly
