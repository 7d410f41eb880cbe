#include <random>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "weylpoly/opexpr.hpp"
#include "support/generators.hpp"

using namespace weylpoly;

namespace {
OperatorPoly roundtrip(const OperatorPoly& op) {
    return lower_ast(parse_opexpr(format_canonical(op)));
}

std::string error_message(const std::string& input) {
    try {
        parse_opexpr(input);
    } catch (const ParseError& e) {
        return e.what();
    }
    FAIL("expected a parse error for: " << input);
    return {};
}
}  // namespace

TEST_CASE("parse shapes", "[opexpr]") {
    const OpExprAst comm = parse_opexpr("[x, p]");
    REQUIRE(comm.kind == OpExprAst::Kind::Commutator);
    REQUIRE(comm.children.size() == 2);
    CHECK(comm.children[0].kind == OpExprAst::Kind::AtomX);
    CHECK(comm.children[1].kind == OpExprAst::Kind::AtomP);

    const OpExprAst pow = parse_opexpr("(p + 2*i*x)^2");
    REQUIRE(pow.kind == OpExprAst::Kind::Power);
    CHECK(pow.exponent == 2ul);
    CHECK(pow.children.front().kind == OpExprAst::Kind::Sum);

    const OpExprAst rat = parse_opexpr("-3/4");
    const OperatorPoly lowered = lower_ast(rat);
    CHECK(lowered == OperatorPoly(QuadScalar(Rational(-3, 4))));
}

TEST_CASE("lowering reproduces operator algebra", "[opexpr]") {
    CHECK(lower_ast(parse_opexpr("[x, p]")) == OperatorPoly(QuadScalar::i()));

    const OperatorPoly gen =
        OperatorPoly::p() + OperatorPoly::x() * (QuadScalar::i() * QuadScalar(Rational(2)));
    CHECK(lower_ast(parse_opexpr("(p + 2*i*x)^2")) == op_power(gen, 2));

    CHECK(lower_ast(parse_opexpr("conj(x^2; p)")) == gen);
    CHECK(lower_ast(parse_opexpr("conj(x; p^3)")) ==
          op_power(OperatorPoly::p() + OperatorPoly(QuadScalar::i()), 3));
    CHECK(lower_ast(parse_opexpr("sqrt2 * sqrt2")) == OperatorPoly(QuadScalar(Rational(2))));
    CHECK(lower_ast(parse_opexpr("x - x")).is_zero());
}

TEST_CASE("non-terminating conjugation surfaces as a lowering error", "[opexpr]") {
    CHECK_THROWS_AS(lower_ast(parse_opexpr("conj(x*p; x)")), LowerError);
    try {
        lower_ast(parse_opexpr("conj(x*p; x)"));
    } catch (const LowerError& e) {
        CHECK(std::string(e.what()).find("does not terminate") != std::string::npos);
        CHECK(e.begin().column == 1);
    }
}

TEST_CASE("canonical formatting", "[opexpr]") {
    CHECK(format_canonical(OperatorPoly()) == "0");
    CHECK(format_canonical(OperatorPoly::one()) == "1");
    CHECK(format_canonical(OperatorPoly(QuadScalar::i())) == "i");
    CHECK(format_canonical(lower_ast(parse_opexpr("(p + 2*i*x)^2"))) ==
          "p^2 + 4*i*x*p - 4*x^2 + 2");
    CHECK(format_canonical(lower_ast(parse_opexpr("conj(x^2; p)"))) == "p + 2*i*x");
    CHECK(format_canonical(lower_ast(parse_opexpr("-x + 1/2"))) == "- x + 1/2");
}

TEST_CASE("errors carry positions", "[opexpr]") {
    CHECK(error_message("conj(x^2; p").find("end of input") != std::string::npos);
    CHECK(error_message("x + )").rfind("line 1, column 5:", 0) == 0);
    CHECK(error_message("x +\n foo").rfind("line 2, column 2:", 0) == 0);
    CHECK(error_message("foo").find("unknown symbol") != std::string::npos);
    CHECK(error_message("1/0").find("zero denominator") != std::string::npos);
    CHECK(error_message("x^(2)").find("exponent") != std::string::npos);
    CHECK(error_message("x^-1").find("exponent") != std::string::npos);
    CHECK(error_message("x^9999999999").find("limit") != std::string::npos);
    CHECK(error_message("x\xc3\xa9").find("non-ASCII") != std::string::npos);
}

TEST_CASE("nesting depth is capped at 64", "[opexpr]") {
    const auto nested = [](std::size_t levels) {
        std::string s(levels, '(');
        s += "x";
        s.append(levels, ')');
        return s;
    };
    CHECK(lower_ast(parse_opexpr(nested(64))) == OperatorPoly::x());
    CHECK(error_message(nested(65)).find("depth") != std::string::npos);
}

TEST_CASE("oversized input is rejected up front", "[opexpr]") {
    std::string big = "x";
    big.append(65 * 1024, ' ');
    CHECK_THROWS_AS(parse_opexpr(big), ParseError);
}

TEST_CASE("format then parse is the identity on normal forms", "[opexpr]") {
    std::mt19937 rng(20260814);
    for (int rep = 0; rep < 300; ++rep) {
        const OperatorPoly op = testsupport::random_operator_poly(rng);
        CAPTURE(format_canonical(op));
        CHECK(roundtrip(op) == op);
    }
}

TEST_CASE("random expressions survive lower, format, reparse", "[opexpr]") {
    std::mt19937 rng(404);
    int produced = 0;
    while (produced < 300) {
        const OpExprAst ast = testsupport::random_ast(rng);
        OperatorPoly lowered;
        try {
            lowered = lower_ast(ast);
        } catch (const LowerError&) {
            continue;  // rare non-terminating conj draw
        }
        ++produced;
        CAPTURE(format_canonical(lowered));
        CHECK(roundtrip(lowered) == lowered);
    }
}

TEST_CASE("malformed inputs always raise parse errors", "[opexpr]") {
    std::mt19937 rng(77);
    for (const std::string& input : testsupport::malformed_inputs(rng, 150)) {
        CAPTURE(input);
        CHECK_THROWS_AS(parse_opexpr(input), ParseError);
    }
}

TEST_CASE("univariate formatting", "[opexpr]") {
    UnivariatePoly h2 = UnivariatePoly::monomial(2, QuadScalar(Rational(4))) -
                        UnivariatePoly(QuadScalar(Rational(2)));
    CHECK(format_univariate(h2) == "4*x^2 - 2");
    CHECK(format_univariate_ascending(h2) == "- 2 + 4*x^2");
    CHECK(format_univariate(UnivariatePoly()) == "0");
}
