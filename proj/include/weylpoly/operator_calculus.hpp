#pragma once

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

#include "weylpoly/operator_poly.hpp"
#include "weylpoly/report.hpp"
#include "weylpoly/univariate_poly.hpp"

namespace weylpoly {

/// Thrown when the nested-commutator series of a conjugation fails to reach
/// zero within the allowed depth. Only nilpotent ad-actions are supported.
class NonTerminatingConjugation : public std::runtime_error {
public:
    explicit NonTerminatingConjugation(std::size_t max_depth)
        : std::runtime_error("similarity series did not terminate within " +
                             std::to_string(max_depth) + " terms") {}
};

struct ConjugationResult {
    OperatorPoly result;
    std::size_t depth = 0;  // number of nonzero terms B, [A,B], [A,[A,B]], …
};

/// e^{μA} B e^{−μA} = Σ_k μ^k/k! · ad_A^k(B), summed until the ad-chain
/// vanishes. Throws NonTerminatingConjugation past max_depth terms.
inline ConjugationResult similarity_conjugate_with_depth(const OperatorPoly& a,
                                                         const OperatorPoly& b,
                                                         const QuadScalar& mu,
                                                         std::size_t max_depth = 64) {
    OperatorPoly acc;
    OperatorPoly term = b;
    QuadScalar mu_power = QuadScalar::one();
    Rational inv_factorial(1);
    std::size_t k = 0;
    while (!term.is_zero()) {
        if (k >= max_depth) {
            throw NonTerminatingConjugation(max_depth);
        }
        acc += term * (mu_power * QuadScalar(inv_factorial));
        term = commutator(a, term);
        ++k;
        mu_power *= mu;
        inv_factorial /= Rational(static_cast<long>(k));
    }
    return {acc, k};
}

inline OperatorPoly similarity_conjugate(const OperatorPoly& a, const OperatorPoly& b,
                                         const QuadScalar& mu, std::size_t max_depth = 64) {
    return similarity_conjugate_with_depth(a, b, mu, max_depth).result;
}

/// Act on the constant function 1: p annihilates it, so every monomial with
/// pdeg > 0 drops and x^a survives as the polynomial x^a. Coefficients must
/// live at grade 0; the grading parameter is reserved for series bookkeeping.
inline UnivariatePoly apply_to_constant(const OperatorPoly& a) {
    UnivariatePoly out;
    for (const auto& [mono, c] : a.terms()) {
        if (!c.grade_zero_only()) {
            throw std::domain_error(
                "apply_to_constant: operator carries grade > 0 coefficients");
        }
        if (mono.pdeg == 0) {
            out += UnivariatePoly::monomial(mono.xdeg, c.at(0));
        }
    }
    return out;
}

/// Σ_{k=0}^{N} A^k/k! truncated to grades ≤ N. Requires every term of A to
/// sit at grade ≥ 1 so each power raises the minimum grade and the series
/// truncates exactly.
inline OperatorPoly graded_exp(const OperatorPoly& a, std::size_t n_grades) {
    const auto mg = a.min_grade();
    if (mg && *mg == 0) {
        throw std::domain_error("graded_exp: exponent has a grade-0 term");
    }
    OperatorPoly acc = OperatorPoly::one();
    OperatorPoly term = OperatorPoly::one();
    for (std::size_t k = 1; k <= n_grades; ++k) {
        term = (term * a).truncated_grades(n_grades) *
               QuadScalar(Rational(1, static_cast<long>(k)));
        if (term.is_zero()) {
            break;
        }
        acc += term;
    }
    return acc;
}

/// Verifies e^{A+B} = e^{−[A,B]/2} e^A e^B grade-by-grade up to t^N.
/// The identity needs [A,[A,B]] = [B,[A,B]] = 0; a violated hypothesis is
/// reported as such, distinct from a failed identity.
inline CheckReport bch_factorize_check(const OperatorPoly& a, const OperatorPoly& b,
                                       std::size_t n_grades) {
    std::map<std::string, std::string> params{{"grades", std::to_string(n_grades)}};
    const auto mga = a.min_grade();
    const auto mgb = b.min_grade();
    if ((mga && *mga == 0) || (mgb && *mgb == 0)) {
        return CheckReport::fail("bch_factorize", params,
                                 "operands must carry grade >= 1 terms only");
    }

    const OperatorPoly c = commutator(a, b);
    if (!commutator(a, c).is_zero() || !commutator(b, c).is_zero()) {
        return CheckReport::fail("bch_factorize", params,
                                 "hypothesis violated: [A,[A,B]] or [B,[A,B]] is nonzero");
    }

    const OperatorPoly lhs = graded_exp(a + b, n_grades);
    const OperatorPoly rhs =
        ((graded_exp(c * QuadScalar(Rational(-1, 2)), n_grades) * graded_exp(a, n_grades))
             .truncated_grades(n_grades) *
         graded_exp(b, n_grades))
            .truncated_grades(n_grades);
    if (lhs == rhs) {
        return CheckReport::pass("bch_factorize", params);
    }
    for (std::size_t g = 0; g <= n_grades; ++g) {
        const OperatorPoly lg = lhs.grade_component(g);
        const OperatorPoly rg = rhs.grade_component(g);
        if (lg != rg) {
            std::ostringstream oss;
            oss << "grade=" << g << ": lhs = " << lg << ", rhs = " << rg;
            return CheckReport::fail("bch_factorize", params, oss.str());
        }
    }
    return CheckReport::fail("bch_factorize", params,
                             "sides differ beyond the compared grades");
}

}  // namespace weylpoly
