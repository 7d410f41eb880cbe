#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>

#include "weylpoly/grade_poly.hpp"
#include "weylpoly/quad_scalar.hpp"

namespace weylpoly {

/// Exponent pair of a normal-ordered word x^xdeg p^pdeg.
struct OpMonomial {
    std::size_t xdeg = 0;
    std::size_t pdeg = 0;

    std::size_t total_degree() const { return xdeg + pdeg; }

    friend auto operator<=>(const OpMonomial&, const OpMonomial&) = default;
};

/// Polynomial in the Heisenberg pair x, p with [x,p] = i, kept in canonical
/// normal order (every x to the left of every p). Coefficients are grade
/// polynomials in the formal parameter t; plain scalars sit at grade 0.
/// Zero coefficients are never stored, so representation is unique.
class OperatorPoly {
public:
    OperatorPoly() = default;
    OperatorPoly(GradePoly constant) {
        if (!constant.is_zero()) {
            terms_[{0, 0}] = std::move(constant);
        }
    }
    OperatorPoly(const QuadScalar& constant) : OperatorPoly(GradePoly(constant)) {}
    OperatorPoly(const Rational& constant) : OperatorPoly(GradePoly(constant)) {}
    OperatorPoly(long constant) : OperatorPoly(GradePoly(constant)) {}
    OperatorPoly(int constant) : OperatorPoly(GradePoly(constant)) {}

    static OperatorPoly x() { return monomial(1, 0, GradePoly(QuadScalar::one())); }
    static OperatorPoly p() { return monomial(0, 1, GradePoly(QuadScalar::one())); }
    static OperatorPoly one() { return OperatorPoly(GradePoly(QuadScalar::one())); }

    static OperatorPoly monomial(std::size_t xdeg, std::size_t pdeg, GradePoly coeff) {
        OperatorPoly out;
        if (!coeff.is_zero()) {
            out.terms_[{xdeg, pdeg}] = std::move(coeff);
        }
        return out;
    }

    bool is_zero() const { return terms_.empty(); }

    const std::map<OpMonomial, GradePoly>& terms() const { return terms_; }

    const GradePoly& coeff(std::size_t xdeg, std::size_t pdeg) const {
        static const GradePoly kZero;
        auto it = terms_.find({xdeg, pdeg});
        return it == terms_.end() ? kZero : it->second;
    }

    std::optional<std::size_t> total_degree() const {
        std::optional<std::size_t> deg;
        for (const auto& [mono, c] : terms_) {
            if (!deg || mono.total_degree() > *deg) {
                deg = mono.total_degree();
            }
        }
        return deg;
    }

    bool grade_zero_only() const {
        for (const auto& [mono, c] : terms_) {
            if (!c.grade_zero_only()) {
                return false;
            }
        }
        return true;
    }

    /// Smallest t-grade carried by any term; "none" for the zero operator.
    std::optional<std::size_t> min_grade() const {
        std::optional<std::size_t> g;
        for (const auto& [mono, c] : terms_) {
            const auto mg = c.min_grade();
            if (mg && (!g || *mg < *g)) {
                g = mg;
            }
        }
        return g;
    }

    /// Discard every coefficient contribution above t^max_grade.
    OperatorPoly truncated_grades(std::size_t max_grade) const {
        OperatorPoly out;
        for (const auto& [mono, c] : terms_) {
            GradePoly t = c.truncated(max_grade);
            if (!t.is_zero()) {
                out.terms_[mono] = std::move(t);
            }
        }
        return out;
    }

    /// Scalar coefficients of t^g across all terms, returned at grade 0.
    OperatorPoly grade_component(std::size_t g) const {
        OperatorPoly out;
        for (const auto& [mono, c] : terms_) {
            if (!c.at(g).is_zero()) {
                out.terms_[mono] = GradePoly(c.at(g));
            }
        }
        return out;
    }

    OperatorPoly operator-() const {
        OperatorPoly out = *this;
        for (auto& [mono, c] : out.terms_) {
            c = -c;
        }
        return out;
    }

    OperatorPoly& operator+=(const OperatorPoly& o) {
        for (const auto& [mono, c] : o.terms_) {
            add_term(mono, c);
        }
        return *this;
    }
    OperatorPoly& operator-=(const OperatorPoly& o) { return *this += -o; }

    friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
    friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }

    /// Normal-ordered product. For single words,
    ///   x^a p^b · x^c p^d = Σ_{j=0}^{min(b,c)} (−i)^j j! C(b,j) C(c,j) x^{a+c−j} p^{b+d−j},
    /// the closed form of repeatedly applying p·x = x·p − i.
    friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
        OperatorPoly out;
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                const GradePoly prod = ca * cb;
                const std::size_t jmax = std::min(ma.pdeg, mb.xdeg);
                for (std::size_t j = 0; j <= jmax; ++j) {
                    mpz_class ways = factorial_z(static_cast<unsigned long>(j));
                    ways *= binomial_z(static_cast<unsigned long>(ma.pdeg),
                                       static_cast<unsigned long>(j));
                    ways *= binomial_z(static_cast<unsigned long>(mb.xdeg),
                                       static_cast<unsigned long>(j));
                    const QuadScalar w =
                        QuadScalar::i_power(-static_cast<long>(j)) * QuadScalar(Rational(ways));
                    out.add_term({ma.xdeg + mb.xdeg - j, ma.pdeg + mb.pdeg - j}, prod * w);
                }
            }
        }
        return out;
    }

    friend OperatorPoly operator*(OperatorPoly a, const QuadScalar& s) {
        if (s.is_zero()) {
            return {};
        }
        for (auto& [mono, c] : a.terms_) {
            c = c * s;
        }
        return a;
    }
    friend OperatorPoly operator*(const QuadScalar& s, OperatorPoly a) {
        return std::move(a) * s;
    }

    friend OperatorPoly operator*(const OperatorPoly& a, const GradePoly& g) {
        OperatorPoly out;
        for (const auto& [mono, c] : a.terms_) {
            out.add_term(mono, c * g);
        }
        return out;
    }
    friend OperatorPoly operator*(const GradePoly& g, const OperatorPoly& a) { return a * g; }

    friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const OperatorPoly& a, const OperatorPoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const OperatorPoly& op) {
        if (op.is_zero()) {
            return os << "0";
        }
        bool first = true;
        for (const auto& [mono, c] : op.terms_) {
            if (!first) {
                os << " + ";
            }
            first = false;
            os << "(" << c << ")";
            if (mono.xdeg == 1) {
                os << "*x";
            } else if (mono.xdeg > 1) {
                os << "*x^" << mono.xdeg;
            }
            if (mono.pdeg == 1) {
                os << "*p";
            } else if (mono.pdeg > 1) {
                os << "*p^" << mono.pdeg;
            }
        }
        return os;
    }

private:
    void add_term(const OpMonomial& mono, const GradePoly& c) {
        if (c.is_zero()) {
            return;
        }
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }

    std::map<OpMonomial, GradePoly> terms_;
};

inline OperatorPoly op_normal_product(const OperatorPoly& a, const OperatorPoly& b) {
    return a * b;
}

inline OperatorPoly commutator(const OperatorPoly& a, const OperatorPoly& b) {
    return a * b - b * a;
}

inline OperatorPoly op_power(const OperatorPoly& a, std::size_t n) {
    OperatorPoly out = OperatorPoly::one();
    for (std::size_t k = 0; k < n; ++k) {
        out = out * a;
    }
    return out;
}

}  // namespace weylpoly
