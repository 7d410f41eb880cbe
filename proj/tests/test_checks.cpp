#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "weylpoly/checks.hpp"

using namespace weylpoly;

TEST_CASE("consistency checks pass on honest generators", "[checks]") {
    CHECK(check_hermite_consistency(0).passed);
    CHECK(check_hermite_consistency(5).passed);
    CHECK(check_addition_theorem(0).passed);
    CHECK(check_addition_theorem(2).passed);
    CHECK(check_laguerre_consistency(0, {Rational(0)}).passed);
    CHECK(check_laguerre_consistency(2, {Rational(0), Rational(1)}).passed);
    CHECK(check_laguerre_consistency(1, {Rational(-1, 3)}).passed);
    CHECK(check_operator_identities(20).passed);
}

TEST_CASE("generating function partial sums", "[checks]") {
    // x=0, alpha=0: every partial sum equals e^0 exactly
    CHECK(check_generating_function(0.0, 0.0, 1, 1e-15).passed);
    CHECK(check_generating_function(0.5, 0.3, 40, 1e-12).passed);

    const CheckReport truncated = check_generating_function(0.5, 0.3, 2, 1e-12);
    CHECK_FALSE(truncated.passed);
    REQUIRE(truncated.first_failure.has_value());
    CHECK(truncated.first_failure->find("exceeds tol") != std::string::npos);
}

TEST_CASE("report formatting is stable", "[checks]") {
    const CheckReport r = check_hermite_consistency(3);
    std::ostringstream once, twice;
    once << r;
    twice << r;
    CHECK(once.str() == twice.str());
    CHECK(once.str() == "[PASS] hermite_consistency (n_max=3)");

    const CheckReport g = check_generating_function(0.5, 0.3, 40, 1e-12);
    std::ostringstream gs;
    gs << g;
    CHECK(gs.str() == "[PASS] generating_function (alpha=0.3, terms=40, tol=1e-12, x=0.5)");
}

TEST_CASE("run_all produces five reports in a fixed order", "[checks]") {
    RunAllParams params;
    params.n_max_hermite = 4;
    params.n_max_addition = 3;
    params.n_max_laguerre = 3;
    params.n_max_operator = 4;

    const std::vector<CheckReport> reports = run_all(params);
    REQUIRE(reports.size() == 5);
    CHECK(reports[0].check_name == "hermite_consistency");
    CHECK(reports[1].check_name == "addition_theorem");
    CHECK(reports[2].check_name == "generating_function");
    CHECK(reports[3].check_name == "laguerre_consistency");
    CHECK(reports[4].check_name == "operator_identities");
    for (const CheckReport& r : reports) {
        CAPTURE(r.check_name);
        CHECK(r.passed);
    }

    // determinism of the full rendered block
    const auto render = [&] {
        std::ostringstream os;
        for (const CheckReport& r : run_all(params)) os << r << '\n';
        return os.str();
    };
    CHECK(render() == render());
}

TEST_CASE("mutated Hermite operator is caught at n=1", "[checks]") {
    auto methods = standard_hermite_methods();
    methods[0] = {"operator", [](std::size_t n) {
                      return negative_controls::hermite_operator_unscaled(n);
                  }};
    const CheckReport r = check_univariate_family_agreement(
        "hermite_consistency", {{"n_max", "50"}}, 50, methods);
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->rfind("n=1", 0) == 0);
}

TEST_CASE("mutated addition prefactor is caught at n=1", "[checks]") {
    const CheckReport r = check_addition_theorem_with_prefactor(
        20, negative_controls::addition_prefactor_integral);
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->rfind("n=1", 0) == 0);
    CHECK(r.first_failure->find("sqrt2") != std::string::npos);
}

TEST_CASE("mutated Laguerre sum is caught at n=1", "[checks]") {
    auto methods = standard_laguerre_methods();
    methods[1] = {"sum", [](std::size_t n, const LaguerreOrder& order) {
                      return negative_controls::laguerre_sum_flipped(n, order);
                  }};
    const CheckReport r = check_laguerre_family_agreement(
        "laguerre_consistency", {{"n_max", "30"}}, 30, default_laguerre_orders(), methods);
    CHECK_FALSE(r.passed);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->rfind("n=1", 0) == 0);
}
