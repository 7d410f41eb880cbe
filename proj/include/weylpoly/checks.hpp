#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "weylpoly/bivariate_poly.hpp"
#include "weylpoly/hermite.hpp"
#include "weylpoly/laguerre.hpp"
#include "weylpoly/operator_calculus.hpp"
#include "weylpoly/operator_poly.hpp"
#include "weylpoly/report.hpp"
#include "weylpoly/univariate_poly.hpp"

namespace weylpoly {

namespace detail {

/// Smallest differing coefficient index, ascending degree.
inline std::string describe_univariate_mismatch(const std::string& label_a,
                                                const UnivariatePoly& a,
                                                const std::string& label_b,
                                                const UnivariatePoly& b) {
    std::size_t top = 0;
    if (a.degree()) {
        top = *a.degree();
    }
    if (b.degree() && *b.degree() > top) {
        top = *b.degree();
    }
    for (std::size_t k = 0; k <= top; ++k) {
        if (a.coeff(k) != b.coeff(k)) {
            std::ostringstream oss;
            oss << "coefficient of x^" << k << ": " << label_a << " = " << a.coeff(k)
                << ", " << label_b << " = " << b.coeff(k);
            return oss.str();
        }
    }
    return "polynomials differ";
}

/// Smallest differing key in graded-lex order (total degree, then xdeg).
inline std::string describe_bivariate_mismatch(const std::string& label_a,
                                               const BivariatePoly& a,
                                               const std::string& label_b,
                                               const BivariatePoly& b) {
    auto graded_lex = [](const BivariatePoly::Key& k1, const BivariatePoly::Key& k2) {
        const std::size_t t1 = k1.first + k1.second;
        const std::size_t t2 = k2.first + k2.second;
        if (t1 != t2) {
            return t1 < t2;
        }
        return k1.first < k2.first;
    };
    std::vector<BivariatePoly::Key> keys;
    for (const auto& [key, c] : a.terms()) {
        keys.push_back(key);
    }
    for (const auto& [key, c] : b.terms()) {
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), graded_lex);
    for (const auto& key : keys) {
        if (a.coeff(key.first, key.second) != b.coeff(key.first, key.second)) {
            std::ostringstream oss;
            oss << "coefficient of x^" << key.first << "*y^" << key.second << ": "
                << label_a << " = " << a.coeff(key.first, key.second) << ", " << label_b
                << " = " << b.coeff(key.first, key.second);
            return oss.str();
        }
    }
    return "polynomials differ";
}

/// Shortest decimal text that round-trips to the same double.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

struct UnivariateMethod {
    std::string label;
    std::function<UnivariatePoly(std::size_t)> generate;
};

struct LaguerreMethod {
    std::string label;
    std::function<UnivariatePoly(std::size_t, const LaguerreOrder&)> generate;
};

inline std::vector<UnivariateMethod> standard_hermite_methods() {
    return {
        {"operator", [](std::size_t n) { return hermite_operator(n); }},
        {"rodrigues", [](std::size_t n) { return hermite_rodrigues(n); }},
        {"recurrence", [](std::size_t n) { return hermite_recurrence(n); }},
    };
}

inline std::vector<LaguerreMethod> standard_laguerre_methods() {
    return {
        {"operator",
         [](std::size_t n, const LaguerreOrder& o) { return laguerre_operator(n, o); }},
        {"sum", [](std::size_t n, const LaguerreOrder& o) { return laguerre_sum(n, o); }},
        {"rodrigues",
         [](std::size_t n, const LaguerreOrder& o) { return laguerre_rodrigues(n, o); }},
    };
}

/// Cross-checks every listed method against the first for n = 0..n_max.
inline CheckReport check_univariate_family_agreement(
    std::string check_name, std::map<std::string, std::string> params, std::size_t n_max,
    const std::vector<UnivariateMethod>& methods) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        const UnivariatePoly reference = methods.front().generate(n);
        for (std::size_t m = 1; m < methods.size(); ++m) {
            const UnivariatePoly other = methods[m].generate(n);
            if (reference != other) {
                std::ostringstream oss;
                oss << "n=" << n << ": "
                    << detail::describe_univariate_mismatch(methods.front().label, reference,
                                                            methods[m].label, other);
                return CheckReport::fail(std::move(check_name), std::move(params), oss.str());
            }
        }
    }
    return CheckReport::pass(std::move(check_name), std::move(params));
}

inline CheckReport check_hermite_consistency(std::size_t n_max) {
    return check_univariate_family_agreement(
        "hermite_consistency", {{"n_max", std::to_string(n_max)}}, n_max,
        standard_hermite_methods());
}

/// Addition-theorem comparison with an injectable prefactor; the identity
/// holds for prefactor(n) = 2^{−n/2}. The convolution side must come out
/// free of sqrt2 and imaginary components before the comparison counts.
inline CheckReport check_addition_theorem_with_prefactor(
    std::size_t n_max, const std::function<QuadScalar(std::size_t)>& prefactor) {
    std::map<std::string, std::string> params{{"n_max", std::to_string(n_max)}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        const BivariatePoly rhs = hermite_addition_rhs(n, prefactor(n));
        if (!rhs.is_pure_rational()) {
            for (const auto& [key, c] : rhs.terms()) {
                if (!c.is_pure_rational()) {
                    std::ostringstream oss;
                    oss << "n=" << n << ": residual sqrt2/imaginary component at x^"
                        << key.first << "*y^" << key.second << ": " << c;
                    return CheckReport::fail("addition_theorem", std::move(params),
                                             oss.str());
                }
            }
        }
        const BivariatePoly lhs = hermite_bivariate_shift(n);
        if (lhs != rhs) {
            std::ostringstream oss;
            oss << "n=" << n << ": "
                << detail::describe_bivariate_mismatch("shift", lhs, "convolution", rhs);
            return CheckReport::fail("addition_theorem", std::move(params), oss.str());
        }
    }
    return CheckReport::pass("addition_theorem", std::move(params));
}

inline CheckReport check_addition_theorem(std::size_t n_max) {
    return check_addition_theorem_with_prefactor(n_max, [](std::size_t n) {
        return QuadScalar::sqrt2_power(-static_cast<long>(n));
    });
}

/// |Σ_{n=0}^{N} H_n(x) αⁿ/n! − e^{2αx − α²}| < tol, in double precision.
/// Float-based by necessity: a truncated series meets a transcendental value.
inline CheckReport check_generating_function(double x, double alpha, std::size_t terms,
                                             double tol) {
    std::map<std::string, std::string> params{{"x", detail::format_double(x)},
                                              {"alpha", detail::format_double(alpha)},
                                              {"terms", std::to_string(terms)},
                                              {"tol", detail::format_double(tol)}};
    double sum = 0.0;
    double weight = 1.0;  // αⁿ/n!
    for (std::size_t n = 0; n <= terms; ++n) {
        sum += poly_eval_f(hermite_operator(n), x) * weight;
        weight *= alpha / static_cast<double>(n + 1);
    }
    const double target = std::exp(2.0 * alpha * x - alpha * alpha);
    const double diff = std::abs(sum - target);
    if (diff < tol) {
        return CheckReport::pass("generating_function", std::move(params));
    }
    std::ostringstream oss;
    oss << "|partial sum - exponential| = " << detail::format_double(diff)
        << " exceeds tol " << detail::format_double(tol);
    return CheckReport::fail("generating_function", std::move(params), oss.str());
}

inline std::string format_orders(const std::vector<Rational>& orders) {
    std::string out;
    for (std::size_t k = 0; k < orders.size(); ++k) {
        if (k > 0) {
            out += ",";
        }
        out += orders[k].to_string();
    }
    return out;
}

inline std::vector<Rational> default_laguerre_orders() {
    return {Rational(0), Rational(1), Rational(5),
            Rational(1, 2), Rational(-1, 3), Rational(7, 3)};
}

/// Cross-checks every Laguerre method against the first for n = 0..n_max and
/// each order, then pins the constant term to gbinom(n+α, n).
inline CheckReport check_laguerre_family_agreement(
    std::string check_name, std::map<std::string, std::string> params, std::size_t n_max,
    const std::vector<Rational>& orders, const std::vector<LaguerreMethod>& methods) {
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (const Rational& alpha : orders) {
            const LaguerreOrder order(alpha);
            const UnivariatePoly reference = methods.front().generate(n, order);
            for (std::size_t m = 1; m < methods.size(); ++m) {
                const UnivariatePoly other = methods[m].generate(n, order);
                if (reference != other) {
                    std::ostringstream oss;
                    oss << "n=" << n << ", alpha=" << alpha << ": "
                        << detail::describe_univariate_mismatch(
                               methods.front().label, reference, methods[m].label, other);
                    return CheckReport::fail(std::move(check_name), std::move(params),
                                             oss.str());
                }
            }
            const QuadScalar expected_constant(
                generalized_binomial(Rational(static_cast<long>(n)) + alpha, n));
            if (reference.coeff(0) != expected_constant) {
                std::ostringstream oss;
                oss << "n=" << n << ", alpha=" << alpha
                    << ": constant term = " << reference.coeff(0)
                    << ", gbinom(n+alpha, n) = " << expected_constant;
                return CheckReport::fail(std::move(check_name), std::move(params),
                                         oss.str());
            }
        }
    }
    return CheckReport::pass(std::move(check_name), std::move(params));
}

inline CheckReport check_laguerre_consistency(std::size_t n_max,
                                              const std::vector<Rational>& orders) {
    return check_laguerre_family_agreement(
        "laguerre_consistency",
        {{"n_max", std::to_string(n_max)}, {"orders", format_orders(orders)}}, n_max,
        orders, standard_laguerre_methods());
}

/// (i) conj(x; pⁿ) = (p+i)ⁿ for n ≤ n_max; (ii) conj(x²; p) = p + 2i·x with
/// the ad-series stopping after exactly two nonzero terms; (iii) the graded
/// factorization e^{A+B} = e^{−[A,B]/2}e^Ae^B for A = 2t·x, B = −i·t·p.
inline CheckReport check_operator_identities(std::size_t n_max) {
    std::map<std::string, std::string> params{{"n_max", std::to_string(n_max)}};
    const QuadScalar one = QuadScalar::one();
    for (std::size_t n = 0; n <= n_max; ++n) {
        const OperatorPoly lhs =
            similarity_conjugate(OperatorPoly::x(), op_power(OperatorPoly::p(), n), one);
        const OperatorPoly rhs =
            op_power(OperatorPoly::p() + OperatorPoly(QuadScalar::i()), n);
        if (lhs != rhs) {
            std::ostringstream oss;
            oss << "n=" << n << ": conj(x; p^n) = " << lhs << ", (p+i)^n = " << rhs;
            return CheckReport::fail("operator_identities", std::move(params), oss.str());
        }
    }

    const OperatorPoly x_sq = OperatorPoly::x() * OperatorPoly::x();
    const ConjugationResult conj =
        similarity_conjugate_with_depth(x_sq, OperatorPoly::p(), one);
    const OperatorPoly expected =
        OperatorPoly::p() +
        OperatorPoly::x() * (QuadScalar::i() * QuadScalar(Rational(2)));
    if (conj.result != expected || conj.depth != 2) {
        std::ostringstream oss;
        oss << "conj(x^2; p) = " << conj.result << " with depth " << conj.depth
            << ", expected " << expected << " with depth 2";
        return CheckReport::fail("operator_identities", std::move(params), oss.str());
    }

    const OperatorPoly a =
        OperatorPoly::monomial(1, 0, GradePoly::monomial(1, QuadScalar(Rational(2))));
    const OperatorPoly b =
        OperatorPoly::monomial(0, 1, GradePoly::monomial(1, -QuadScalar::i()));
    const CheckReport bch = bch_factorize_check(a, b, 12);
    if (!bch.passed) {
        return CheckReport::fail("operator_identities", std::move(params),
                                 "bch_factorize: " + *bch.first_failure);
    }
    return CheckReport::pass("operator_identities", std::move(params));
}

struct GenFunctionParams {
    double x = 0.5;
    double alpha = 0.3;
    std::size_t terms = 40;
    double tol = 1e-12;
};

struct RunAllParams {
    std::size_t n_max_hermite = 50;
    std::size_t n_max_addition = 20;
    std::size_t n_max_laguerre = 30;
    std::vector<Rational> orders = default_laguerre_orders();
    GenFunctionParams genfunc;
    std::size_t n_max_operator = 20;
};

/// All five checks in fixed report order, regardless of execution order.
inline std::vector<CheckReport> run_all(const RunAllParams& params = RunAllParams()) {
    std::vector<CheckReport> reports;
    reports.push_back(check_hermite_consistency(params.n_max_hermite));
    reports.push_back(check_addition_theorem(params.n_max_addition));
    reports.push_back(check_generating_function(params.genfunc.x, params.genfunc.alpha,
                                                params.genfunc.terms, params.genfunc.tol));
    reports.push_back(check_laguerre_consistency(params.n_max_laguerre, params.orders));
    reports.push_back(check_operator_identities(params.n_max_operator));
    return reports;
}

/// Deliberate mutants of the three generators, used to confirm the suite
/// detects each documented defect at its smallest failing n.
namespace negative_controls {

/// p + ix in place of p + 2ix.
inline UnivariatePoly hermite_operator_unscaled(std::size_t n) {
    const OperatorPoly generator = OperatorPoly::p() + OperatorPoly::x() * QuadScalar::i();
    return apply_to_constant(op_power(generator, n)) *
           QuadScalar::i_power(-static_cast<long>(n));
}

/// 2^{−n} in place of 2^{−n/2}.
inline QuadScalar addition_prefactor_integral(std::size_t n) {
    return QuadScalar(Rational::pow2(-static_cast<long>(n)));
}

/// gbinom(−(n+α), n−k) in place of gbinom(n+α, n−k).
inline UnivariatePoly laguerre_sum_flipped(std::size_t n, const LaguerreOrder& order) {
    const Rational flipped = -(Rational(static_cast<long>(n)) + order.alpha);
    UnivariatePoly out;
    for (std::size_t k = 0; k <= n; ++k) {
        Rational c = generalized_binomial(flipped, n - k) /
                     Rational(factorial_z(static_cast<unsigned long>(k)));
        if (k % 2 == 1) {
            c = -c;
        }
        out += UnivariatePoly::monomial(k, QuadScalar(c));
    }
    return out;
}

}  // namespace negative_controls

}  // namespace weylpoly
