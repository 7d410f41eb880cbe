#pragma once

#include <gmpxx.h>

#include <cctype>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace weylpoly {

/// Arbitrary-precision rational number, always reduced, denominator > 0.
/// Thin value wrapper over GMP so that exactness and canonical form are
/// guaranteed by construction.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    Rational(mpz_class n) : q_(std::move(n)) {}

    Rational(long n, long d) : Rational(mpz_class(n), mpz_class(d)) {}

    Rational(mpz_class n, mpz_class d) {
        if (d == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_ = mpq_class(std::move(n), std::move(d));
        q_.canonicalize();
    }

    /// Parses "n" or "n/d" with an optional leading '-'. Throws
    /// std::invalid_argument on anything else (including a zero denominator).
    static Rational parse(std::string_view text) {
        auto fail = [&]() -> Rational {
            throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
        };
        std::size_t pos = text.empty() ? 0 : (text[0] == '-' ? 1 : 0);
        const std::size_t num_begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos == num_begin) {
            return fail();
        }
        const mpz_class num(std::string(text.substr(0, pos)));
        if (pos == text.size()) {
            return Rational(num);
        }
        if (text[pos] != '/') {
            return fail();
        }
        const std::size_t den_begin = ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
        if (pos != text.size() || pos == den_begin) {
            return fail();
        }
        const mpz_class den(std::string(text.substr(den_begin)));
        if (den == 0) {
            return fail();
        }
        return Rational(num, den);
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return mpq_sgn(q_.get_mpq_t()); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw std::domain_error("Rational: division by zero");
        }
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational pow(unsigned long e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        return Rational(num, den);  // already coprime, denominator positive
    }

    /// Exact 2^e for any integer e.
    static Rational pow2(long e) {
        mpz_class v(1);
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
        return e < 0 ? Rational(mpz_class(1), v) : Rational(v);
    }

    double to_double() const { return q_.get_d(); }

    /// Shortest form: "n" when the denominator is one, else "n/d".
    std::string to_string() const {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Machine form: always "n/d", e.g. "4/1".
    std::string to_fraction_string() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;  // canonical: reduced, positive denominator
};

inline mpz_class factorial_z(unsigned long n) {
    mpz_class v;
    mpz_fac_ui(v.get_mpz_t(), n);
    return v;
}

inline mpz_class binomial_z(unsigned long n, unsigned long k) {
    mpz_class v;
    mpz_bin_uiui(v.get_mpz_t(), n, k);
    return v;
}

inline Rational factorial(unsigned long n) { return Rational(factorial_z(n)); }
inline Rational binomial(unsigned long n, unsigned long k) { return Rational(binomial_z(n, k)); }

}  // namespace weylpoly
