#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "weylpoly/rational.hpp"

namespace weylpoly {

/// Element of the number field Q(i,√2), stored as
///     (a + b·√2) + (c + d·√2)·i
/// with reduced rational components. This is the coefficient field for all
/// symbolic work: it is the smallest field containing the imaginary unit and
/// √2 and closed under the arithmetic that appears in the derivations.
class QuadScalar {
public:
    QuadScalar() = default;
    QuadScalar(Rational a) : a_(std::move(a)) {}
    QuadScalar(long n) : a_(n) {}
    QuadScalar(int n) : a_(n) {}
    QuadScalar(Rational a, Rational b, Rational c, Rational d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

    static QuadScalar zero() { return QuadScalar(); }
    static QuadScalar one() { return QuadScalar(1); }
    static QuadScalar i() { return QuadScalar(0, 0, 1, 0); }
    static QuadScalar sqrt2() { return QuadScalar(0, 1, 0, 0); }

    /// i^k for any integer k (period four).
    static QuadScalar i_power(long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return QuadScalar(1);
            case 1: return i();
            case 2: return QuadScalar(-1);
            default: return QuadScalar(0, 0, -1, 0);
        }
    }

    /// Exact √2^e for any integer e; odd powers carry a √2 component.
    static QuadScalar sqrt2_power(long e) {
        if (e < 0) {
            return sqrt2_power(-e).inverse();
        }
        const Rational two_part = Rational::pow2(e / 2);
        if (e % 2 == 0) {
            return QuadScalar(two_part);
        }
        return QuadScalar(0, two_part, 0, 0);
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool is_zero() const {
        return a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero();
    }
    /// True when the value lies in Q (no √2, no imaginary part).
    bool is_pure_rational() const { return b_.is_zero() && c_.is_zero() && d_.is_zero(); }
    /// True when the imaginary part vanishes (value lies in Q(√2)).
    bool is_real() const { return c_.is_zero() && d_.is_zero(); }

    /// Complex conjugate (√2 is left fixed).
    QuadScalar conj() const { return QuadScalar(a_, b_, -c_, -d_); }

    QuadScalar operator-() const { return QuadScalar(-a_, -b_, -c_, -d_); }

    QuadScalar& operator+=(const QuadScalar& o) {
        a_ += o.a_;
        b_ += o.b_;
        c_ += o.c_;
        d_ += o.d_;
        return *this;
    }
    QuadScalar& operator-=(const QuadScalar& o) { return *this += -o; }

    QuadScalar& operator*=(const QuadScalar& o) { return *this = *this * o; }
    QuadScalar& operator/=(const QuadScalar& o) { return *this = *this / o; }

    friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
    friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }

    friend QuadScalar operator*(const QuadScalar& x, const QuadScalar& y) {
        // Multiply real/imaginary parts as pairs over Q(√2), where
        // (e + f√2)(g + h√2) = (eg + 2fh) + (eh + fg)√2.
        const Rational re_a = pair_mul_lo(x.a_, x.b_, y.a_, y.b_) - pair_mul_lo(x.c_, x.d_, y.c_, y.d_);
        const Rational re_b = pair_mul_hi(x.a_, x.b_, y.a_, y.b_) - pair_mul_hi(x.c_, x.d_, y.c_, y.d_);
        const Rational im_c = pair_mul_lo(x.a_, x.b_, y.c_, y.d_) + pair_mul_lo(x.c_, x.d_, y.a_, y.b_);
        const Rational im_d = pair_mul_hi(x.a_, x.b_, y.c_, y.d_) + pair_mul_hi(x.c_, x.d_, y.a_, y.b_);
        return QuadScalar(re_a, re_b, im_c, im_d);
    }

    friend QuadScalar operator/(const QuadScalar& x, const QuadScalar& y) {
        return x * y.inverse();
    }

    /// Exact multiplicative inverse; throws std::domain_error on zero.
    QuadScalar inverse() const {
        if (is_zero()) {
            throw std::domain_error("QuadScalar: division by zero");
        }
        // z·conj(z) = u lies in Q(√2); u·(e − f√2) = e² − 2f² lies in Q and is
        // nonzero for z ≠ 0 because √2 is irrational.
        const QuadScalar u = *this * conj();
        const Rational norm = u.a_ * u.a_ - Rational(2) * u.b_ * u.b_;
        const QuadScalar u_conj(u.a_, -u.b_, Rational(), Rational());
        return conj() * u_conj * QuadScalar(Rational(1) / norm);
    }

    friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }

    /// Numeric value of a real element a + b√2; throws if an imaginary
    /// component is present.
    double to_double() const {
        if (!is_real()) {
            throw std::domain_error("QuadScalar: nonzero imaginary part in to_double");
        }
        return a_.to_double() + b_.to_double() * 1.41421356237309504880168872420969808;
    }

    /// Canonical human-readable component form, e.g. "1 - 3/2*sqrt2 + (1 + 2*sqrt2)*i".
    std::string to_component_string() const {
        std::string out;
        auto append = [&out](int sign, const std::string& magnitude) {
            if (out.empty()) {
                if (sign < 0) {
                    out += "-";
                }
            } else {
                out += sign < 0 ? " - " : " + ";
            }
            out += magnitude;
        };
        if (!a_.is_zero()) {
            append(a_.sign(), a_.abs().to_string());
        }
        if (!b_.is_zero()) {
            const Rational m = b_.abs();
            append(b_.sign(), m == Rational(1) ? "sqrt2" : m.to_string() + "*sqrt2");
        }
        if (!c_.is_zero() && !d_.is_zero()) {
            std::string inner = c_.to_string();
            inner += d_.sign() < 0 ? " - " : " + ";
            const Rational m = d_.abs();
            inner += m == Rational(1) ? "sqrt2" : m.to_string() + "*sqrt2";
            append(1, "(" + inner + ")*i");
        } else if (!c_.is_zero()) {
            const Rational m = c_.abs();
            append(c_.sign(), m == Rational(1) ? "i" : m.to_string() + "*i");
        } else if (!d_.is_zero()) {
            const Rational m = d_.abs();
            append(d_.sign(), m == Rational(1) ? "sqrt2*i" : m.to_string() + "*sqrt2*i");
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadScalar& s) {
        return os << s.to_component_string();
    }

private:
    static Rational pair_mul_lo(const Rational& e, const Rational& f,
                                const Rational& g, const Rational& h) {
        return e * g + Rational(2) * f * h;
    }
    static Rational pair_mul_hi(const Rational& e, const Rational& f,
                                const Rational& g, const Rational& h) {
        return e * h + f * g;
    }

    Rational a_, b_, c_, d_;
};

}  // namespace weylpoly
