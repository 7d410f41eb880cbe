#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "weylpoly/quad_scalar.hpp"

namespace weylpoly {

/// Polynomial in the formal bookkeeping parameter t over Q(i,√2). The grade
/// of a term is its power of t; trailing zero grades are never stored, so the
/// zero value has an empty coefficient sequence. Grading is what lets the
/// exponential and Baker–Hausdorff machinery truncate order by order.
class GradePoly {
public:
    GradePoly() = default;
    GradePoly(QuadScalar s) {
        if (!s.is_zero()) {
            coeffs_.push_back(std::move(s));
        }
    }
    GradePoly(const Rational& r) : GradePoly(QuadScalar(r)) {}
    GradePoly(long n) : GradePoly(QuadScalar(n)) {}
    GradePoly(int n) : GradePoly(QuadScalar(n)) {}

    static GradePoly monomial(std::size_t grade, QuadScalar coeff) {
        GradePoly g;
        if (!coeff.is_zero()) {
            g.coeffs_.resize(grade + 1);
            g.coeffs_[grade] = std::move(coeff);
        }
        return g;
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }

    std::optional<std::size_t> min_grade() const {
        for (std::size_t g = 0; g < coeffs_.size(); ++g) {
            if (!coeffs_[g].is_zero()) {
                return g;
            }
        }
        return std::nullopt;
    }

    /// True when the value is zero or pure grade 0.
    bool grade_zero_only() const { return coeffs_.size() <= 1; }

    const QuadScalar& at(std::size_t grade) const {
        static const QuadScalar kZero;
        return grade < coeffs_.size() ? coeffs_[grade] : kZero;
    }

    GradePoly operator-() const {
        GradePoly g = *this;
        for (auto& c : g.coeffs_) {
            c = -c;
        }
        return g;
    }

    GradePoly& operator+=(const GradePoly& o) {
        if (coeffs_.size() < o.coeffs_.size()) {
            coeffs_.resize(o.coeffs_.size());
        }
        for (std::size_t g = 0; g < o.coeffs_.size(); ++g) {
            coeffs_[g] += o.coeffs_[g];
        }
        trim();
        return *this;
    }
    GradePoly& operator-=(const GradePoly& o) { return *this += -o; }

    friend GradePoly operator+(GradePoly x, const GradePoly& y) { return x += y; }
    friend GradePoly operator-(GradePoly x, const GradePoly& y) { return x -= y; }

    friend GradePoly operator*(const GradePoly& x, const GradePoly& y) {
        if (x.is_zero() || y.is_zero()) {
            return {};
        }
        GradePoly out;
        out.coeffs_.resize(x.coeffs_.size() + y.coeffs_.size() - 1);
        for (std::size_t gx = 0; gx < x.coeffs_.size(); ++gx) {
            if (x.coeffs_[gx].is_zero()) {
                continue;
            }
            for (std::size_t gy = 0; gy < y.coeffs_.size(); ++gy) {
                if (!y.coeffs_[gy].is_zero()) {
                    out.coeffs_[gx + gy] += x.coeffs_[gx] * y.coeffs_[gy];
                }
            }
        }
        out.trim();
        return out;
    }

    friend GradePoly operator*(GradePoly x, const QuadScalar& s) {
        if (s.is_zero()) {
            return {};
        }
        for (auto& c : x.coeffs_) {
            c *= s;
        }
        x.trim();
        return x;
    }
    friend GradePoly operator*(const QuadScalar& s, GradePoly x) { return std::move(x) * s; }

    GradePoly truncated(std::size_t max_grade) const {
        GradePoly g = *this;
        if (g.coeffs_.size() > max_grade + 1) {
            g.coeffs_.resize(max_grade + 1);
        }
        g.trim();
        return g;
    }

    friend bool operator==(const GradePoly& x, const GradePoly& y) {
        return x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const GradePoly& x, const GradePoly& y) { return !(x == y); }

    friend std::ostream& operator<<(std::ostream& os, const GradePoly& g) {
        if (g.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (std::size_t grade = 0; grade < g.coeffs_.size(); ++grade) {
            if (g.coeffs_[grade].is_zero()) {
                continue;
            }
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << g.coeffs_[grade] << ")";
            if (grade == 1) {
                os << "*t";
            } else if (grade > 1) {
                os << "*t^" << grade;
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

    std::vector<QuadScalar> coeffs_;  // index = grade; invariant: back() nonzero
};

}  // namespace weylpoly
