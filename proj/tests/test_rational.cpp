#include <random>
#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "weylpoly/rational.hpp"

using weylpoly::binomial;
using weylpoly::factorial;
using weylpoly::Rational;

TEST_CASE("construction reduces and normalizes sign", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).numerator() == 2);
    CHECK(Rational(6, 3).denominator() == 1);
    CHECK(Rational(-1, 2).denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts n and n/d, rejects everything else", "[rational]") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("4/2") == Rational(2));
    CHECK(Rational::parse("0") == Rational(0));
    for (const char* bad : {"", "x", "1/", "/2", "1/-2", "1.5", " 1", "1 ", "1//2", "-",
                            "1/0", "+3"}) {
        INFO(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("field arithmetic", "[rational]") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(-1).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(1, 9).sign() == 1);
}

TEST_CASE("powers of two are exact for both signs", "[rational]") {
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational::pow2(5) == Rational(32));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(-2).pow(10) == Rational(1024));
}

TEST_CASE("text forms", "[rational]") {
    CHECK(Rational(4).to_string() == "4");
    CHECK(Rational(-3, 4).to_string() == "-3/4");
    CHECK(Rational(4).to_fraction_string() == "4/1");
    CHECK(Rational(-3, 4).to_fraction_string() == "-3/4");
}

TEST_CASE("factorial and binomial helpers", "[rational]") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(binomial(10, 3) == Rational(120));
    CHECK(binomial(4, 0) == Rational(1));
    CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("field axioms on random values", "[rational]") {
    std::mt19937 rng(20260814);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 50);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    for (int rep = 0; rep < 200; ++rep) {
        const Rational a = draw();
        const Rational b = draw();
        const Rational c = draw();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) {
            CHECK(a * (Rational(1) / a) == Rational(1));
        }
    }
}
