#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "weylpoly/quad_scalar.hpp"

namespace weylpoly {

/// Dense univariate polynomial over Q(i,√2), coefficients indexed by degree
/// with trailing zeros trimmed. The zero polynomial has no coefficients and
/// its degree is "none".
class UnivariatePoly {
public:
    UnivariatePoly() = default;
    UnivariatePoly(QuadScalar constant) {
        if (!constant.is_zero()) {
            coeffs_.push_back(std::move(constant));
        }
    }
    UnivariatePoly(const Rational& constant) : UnivariatePoly(QuadScalar(constant)) {}
    UnivariatePoly(long constant) : UnivariatePoly(QuadScalar(constant)) {}
    UnivariatePoly(int constant) : UnivariatePoly(QuadScalar(constant)) {}

    explicit UnivariatePoly(std::vector<QuadScalar> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static UnivariatePoly monomial(std::size_t degree, QuadScalar coeff) {
        UnivariatePoly p;
        if (!coeff.is_zero()) {
            p.coeffs_.resize(degree + 1);
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    const QuadScalar& coeff(std::size_t degree) const {
        static const QuadScalar kZero;
        return degree < coeffs_.size() ? coeffs_[degree] : kZero;
    }

    const QuadScalar& leading_coeff() const {
        if (coeffs_.empty()) {
            throw std::domain_error("UnivariatePoly: zero polynomial has no leading coefficient");
        }
        return coeffs_.back();
    }

    bool is_pure_rational() const {
        for (const auto& c : coeffs_) {
            if (!c.is_pure_rational()) {
                return false;
            }
        }
        return true;
    }

    UnivariatePoly operator-() const {
        UnivariatePoly p = *this;
        for (auto& c : p.coeffs_) {
            c = -c;
        }
        return p;
    }

    UnivariatePoly& operator+=(const UnivariatePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
            coeffs_[k] += o.coeffs_[k];
        }
        trim();
        return *this;
    }
    UnivariatePoly& operator-=(const UnivariatePoly& o) { return *this += -o; }

    friend UnivariatePoly operator+(UnivariatePoly x, const UnivariatePoly& y) { return x += y; }
    friend UnivariatePoly operator-(UnivariatePoly x, const UnivariatePoly& y) { return x -= y; }

    friend UnivariatePoly operator*(const UnivariatePoly& x, const UnivariatePoly& y) {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        UnivariatePoly out;
        out.coeffs_.resize(x.coeffs_.size() + y.coeffs_.size() - 1);
        for (std::size_t j = 0; j < x.coeffs_.size(); ++j) {
            if (x.coeffs_[j].is_zero()) {
                continue;
            }
            for (std::size_t k = 0; k < y.coeffs_.size(); ++k) {
                if (!y.coeffs_[k].is_zero()) {
                    out.coeffs_[j + k] += x.coeffs_[j] * y.coeffs_[k];
                }
            }
        }
        out.trim();
        return out;
    }

    friend UnivariatePoly operator*(UnivariatePoly x, const QuadScalar& s) {
        if (s.is_zero()) {
            return {};
        }
        for (auto& c : x.coeffs_) {
            c *= s;
        }
        x.trim();
        return x;
    }
    friend UnivariatePoly operator*(const QuadScalar& s, UnivariatePoly x) {
        return std::move(x) * s;
    }

    /// Multiply by x^k.
    UnivariatePoly shifted(std::size_t k) const {
        if (is_zero() || k == 0) {
            UnivariatePoly p = *this;
            return p;
        }
        UnivariatePoly p;
        p.coeffs_.resize(coeffs_.size() + k);
        for (std::size_t j = 0; j < coeffs_.size(); ++j) {
            p.coeffs_[j + k] = coeffs_[j];
        }
        return p;
    }

    UnivariatePoly derivative() const {
        if (coeffs_.size() <= 1) {
            return {};
        }
        UnivariatePoly p;
        p.coeffs_.resize(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) {
            p.coeffs_[k - 1] = coeffs_[k] * QuadScalar(Rational(static_cast<long>(k)));
        }
        p.trim();
        return p;
    }

    /// q(x) ↦ q(s·x): the degree-k coefficient is scaled by s^k.
    UnivariatePoly compose_scaled(const QuadScalar& s) const {
        UnivariatePoly p;
        p.coeffs_.resize(coeffs_.size());
        QuadScalar power = QuadScalar::one();
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            p.coeffs_[k] = coeffs_[k] * power;
            power *= s;
        }
        p.trim();
        return p;
    }

    /// Exact Horner evaluation at a rational point.
    QuadScalar eval(const Rational& point) const {
        const QuadScalar x(point);
        QuadScalar acc;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * x + coeffs_[k];
        }
        return acc;
    }

    /// Double-precision Horner evaluation. Requires every coefficient to be a
    /// pure rational (zero √2 and imaginary components); throws otherwise.
    double eval_double(double point) const {
        if (!is_pure_rational()) {
            throw std::domain_error("UnivariatePoly: non-rational coefficients in eval_double");
        }
        double acc = 0.0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * point + coeffs_[k].a().to_double();
        }
        return acc;
    }

    friend bool operator==(const UnivariatePoly& x, const UnivariatePoly& y) {
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const UnivariatePoly& x, const UnivariatePoly& y) {
        return !(x == y);
    }

    friend std::ostream& operator<<(std::ostream& os, const UnivariatePoly& p) {
        if (p.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (p.coeffs_[k].is_zero()) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << p.coeffs_[k] << ")";
            if (k == 1) {
                os << "*x";
            } else if (k > 1) {
                os << "*x^" << k;
            }
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) {
            coeffs_.pop_back();
        }
    }

    std::vector<QuadScalar> coeffs_;
};

inline QuadScalar poly_eval(const UnivariatePoly& poly, const Rational& point) {
    return poly.eval(point);
}

inline double poly_eval_f(const UnivariatePoly& poly, double point) {
    return poly.eval_double(point);
}

}  // namespace weylpoly
