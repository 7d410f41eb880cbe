#pragma once

#include <cstddef>
#include <map>
#include <ostream>
#include <utility>

#include "weylpoly/quad_scalar.hpp"
#include "weylpoly/univariate_poly.hpp"

namespace weylpoly {

/// Sparse polynomial in two commuting variables x, y over Q(i,√2).
/// Keys are (xdeg, ydeg); zero coefficients are never stored.
class BivariatePoly {
public:
    using Key = std::pair<std::size_t, std::size_t>;

    BivariatePoly() = default;
    BivariatePoly(QuadScalar constant) {
        if (!constant.is_zero()) {
            terms_[{0, 0}] = std::move(constant);
        }
    }
    BivariatePoly(const Rational& constant) : BivariatePoly(QuadScalar(constant)) {}
    BivariatePoly(long constant) : BivariatePoly(QuadScalar(constant)) {}
    BivariatePoly(int constant) : BivariatePoly(QuadScalar(constant)) {}

    static BivariatePoly monomial(std::size_t xdeg, std::size_t ydeg, QuadScalar coeff) {
        BivariatePoly p;
        if (!coeff.is_zero()) {
            p.terms_[{xdeg, ydeg}] = std::move(coeff);
        }
        return p;
    }

    static BivariatePoly x() { return monomial(1, 0, QuadScalar::one()); }
    static BivariatePoly y() { return monomial(0, 1, QuadScalar::one()); }

    /// Embed a univariate polynomial as a polynomial in x alone.
    static BivariatePoly from_univariate_x(const UnivariatePoly& u) {
        BivariatePoly p;
        if (u.is_zero()) {
            return p;
        }
        for (std::size_t k = 0; k <= *u.degree(); ++k) {
            if (!u.coeff(k).is_zero()) {
                p.terms_[{k, 0}] = u.coeff(k);
            }
        }
        return p;
    }

    /// Embed a univariate polynomial as a polynomial in y alone.
    static BivariatePoly from_univariate_y(const UnivariatePoly& u) {
        BivariatePoly p;
        if (u.is_zero()) {
            return p;
        }
        for (std::size_t k = 0; k <= *u.degree(); ++k) {
            if (!u.coeff(k).is_zero()) {
                p.terms_[{0, k}] = u.coeff(k);
            }
        }
        return p;
    }

    /// Substitute x ↦ x + y into a univariate polynomial (Horner in x+y).
    static BivariatePoly compose_x_plus_y(const UnivariatePoly& u) {
        if (u.is_zero()) {
            return {};
        }
        const BivariatePoly shift = x() + y();
        BivariatePoly acc;
        for (std::size_t k = *u.degree() + 1; k-- > 0;) {
            acc = acc * shift + BivariatePoly(u.coeff(k));
        }
        return acc;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<Key, QuadScalar>& terms() const { return terms_; }

    const QuadScalar& coeff(std::size_t xdeg, std::size_t ydeg) const {
        static const QuadScalar kZero;
        auto it = terms_.find({xdeg, ydeg});
        return it == terms_.end() ? kZero : it->second;
    }

    bool is_pure_rational() const {
        for (const auto& [key, c] : terms_) {
            if (!c.is_pure_rational()) {
                return false;
            }
        }
        return true;
    }

    BivariatePoly operator-() const {
        BivariatePoly p = *this;
        for (auto& [key, c] : p.terms_) {
            c = -c;
        }
        return p;
    }

    BivariatePoly& operator+=(const BivariatePoly& o) {
        for (const auto& [key, c] : o.terms_) {
            auto it = terms_.find(key);
            if (it == terms_.end()) {
                terms_.emplace(key, c);
            } else {
                it->second += c;
                if (it->second.is_zero()) {
                    terms_.erase(it);
                }
            }
        }
        return *this;
    }
    BivariatePoly& operator-=(const BivariatePoly& o) { return *this += -o; }

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                const Key key{ka.first + kb.first, ka.second + kb.second};
                auto it = out.terms_.find(key);
                if (it == out.terms_.end()) {
                    it = out.terms_.emplace(key, QuadScalar()).first;
                }
                it->second += ca * cb;
                if (it->second.is_zero()) {
                    out.terms_.erase(it);
                }
            }
        }
        return out;
    }

    friend BivariatePoly operator*(BivariatePoly a, const QuadScalar& s) {
        if (s.is_zero()) {
            return {};
        }
        for (auto& [key, c] : a.terms_) {
            c *= s;
        }
        return a;
    }
    friend BivariatePoly operator*(const QuadScalar& s, BivariatePoly a) {
        return std::move(a) * s;
    }

    /// Set y = 0, returning the univariate remainder in x.
    UnivariatePoly substitute_y_zero() const {
        UnivariatePoly out;
        for (const auto& [key, c] : terms_) {
            if (key.second == 0) {
                out += UnivariatePoly::monomial(key.first, c);
            }
        }
        return out;
    }

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) {
        return !(a == b);
    }

    friend std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) {
        if (p.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (const auto& [key, c] : p.terms_) {
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << c << ")";
            if (key.first == 1) {
                os << "*x";
            } else if (key.first > 1) {
                os << "*x^" << key.first;
            }
            if (key.second == 1) {
                os << "*y";
            } else if (key.second > 1) {
                os << "*y^" << key.second;
            }
        }
        return os;
    }

private:
    std::map<Key, QuadScalar> terms_;
};

}  // namespace weylpoly
