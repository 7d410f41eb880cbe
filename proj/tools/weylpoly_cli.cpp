// Command-line front end: coefficient tables, identity suite, expression
// normalization, and point evaluation over the exact kernel.
//
// Exit codes: 0 success, 1 check/agreement failure (or a non-terminating
// conjugation), 2 usage or parse error. Diagnostics go to stderr; stdout
// carries only data.

#include <charconv>
#include <cstddef>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylpoly/weylpoly.hpp"

namespace {

using nlohmann::json;
using namespace weylpoly;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CheckFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_point(const std::string& text) {
    double value = 0.0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc() || res.ptr != end || text.empty()) {
        throw UsageError("malformed point '" + text + "'");
    }
    return value;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
}

Rational parse_rational_arg(const std::string& text, const std::string& what) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError("malformed " + what + " '" + text + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
    std::string family;
    long n = 0;
    std::string alpha_text;
    std::string method = "all";
    std::string format = "plain";
};

struct Record {
    std::string method;
    UnivariatePoly poly;
    std::vector<std::string> coeffs;  // "num/den", ascending degree
};

std::vector<std::string> methods_for(const std::string& family, const std::string& method) {
    const std::vector<std::string> hermite{"operator", "rodrigues", "recurrence"};
    const std::vector<std::string> laguerre{"operator", "sum", "rodrigues"};
    const auto& known = family == "hermite" ? hermite : laguerre;
    if (method == "all") {
        return known;
    }
    for (const auto& m : known) {
        if (m == method) {
            return {method};
        }
    }
    throw UsageError("unknown method '" + method + "' for family '" + family + "'");
}

UnivariatePoly generate_poly(const std::string& family, const std::string& method,
                             std::size_t n, const std::optional<Rational>& alpha) {
    if (family == "hermite") {
        if (method == "operator") {
            return hermite_operator(n);
        }
        if (method == "rodrigues") {
            return hermite_rodrigues(n);
        }
        return hermite_recurrence(n);
    }
    const LaguerreOrder order(*alpha);
    if (method == "operator") {
        return laguerre_operator(n, order);
    }
    if (method == "sum") {
        return laguerre_sum(n, order);
    }
    return laguerre_rodrigues(n, order);
}

std::vector<std::string> rational_coeff_texts(const UnivariatePoly& poly, std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        const QuadScalar& c = poly.coeff(k);
        if (!c.is_pure_rational()) {
            throw std::logic_error("coefficient of x^" + std::to_string(k) +
                                   " is not a pure rational");
        }
        out.push_back(c.a().to_fraction_string());
    }
    return out;
}

int cmd_generate(const GenerateArgs& args) {
    if (args.family != "hermite" && args.family != "laguerre") {
        throw UsageError("unknown family '" + args.family + "'");
    }
    if (args.format != "plain" && args.format != "json" && args.format != "csv") {
        throw UsageError("unknown format '" + args.format + "'");
    }
    std::optional<Rational> alpha;
    if (args.family == "laguerre") {
        if (args.alpha_text.empty()) {
            throw UsageError("missing --alpha (required for laguerre)");
        }
        alpha = parse_rational_arg(args.alpha_text, "--alpha");
    } else if (!args.alpha_text.empty()) {
        throw UsageError("--alpha is only valid for family 'laguerre'");
    }

    const std::size_t n = static_cast<std::size_t>(args.n);
    const std::vector<std::string> methods = methods_for(args.family, args.method);
    std::vector<Record> records;
    for (const auto& method : methods) {
        Record rec;
        rec.method = method;
        rec.poly = generate_poly(args.family, method, n, alpha);
        rec.coeffs = rational_coeff_texts(rec.poly, n);
        records.push_back(std::move(rec));
    }
    const bool all_methods = args.method == "all";
    bool agreement = true;
    for (const auto& rec : records) {
        agreement = agreement && rec.poly == records.front().poly;
    }

    if (args.format == "json") {
        json doc;
        doc["records"] = json::array();
        for (const auto& rec : records) {
            json r;
            r["family"] = args.family;
            r["n"] = args.n;
            if (alpha) {
                r["alpha"] = alpha->to_fraction_string();
            }
            r["method"] = rec.method;
            r["coeffs"] = rec.coeffs;
            doc["records"].push_back(std::move(r));
        }
        if (all_methods) {
            doc["agreement"] = agreement;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (args.format == "csv") {
        for (const auto& rec : records) {
            std::cout << "# family=" << args.family << ",n=" << args.n;
            if (alpha) {
                std::cout << ",alpha=" << alpha->to_fraction_string();
            }
            std::cout << ",method=" << rec.method << "\n";
            std::cout << "degree,coefficient\n";
            for (std::size_t k = 0; k < rec.coeffs.size(); ++k) {
                std::cout << k << "," << rec.coeffs[k] << "\n";
            }
        }
        if (all_methods) {
            std::cout << "# agreement=" << (agreement ? "true" : "false") << "\n";
        }
    } else {
        for (const auto& rec : records) {
            if (all_methods) {
                std::cout << rec.method << ": ";
            }
            std::cout << format_univariate_ascending(rec.poly) << "\n";
        }
        if (all_methods) {
            std::cout << "agreement: " << (agreement ? "true" : "false") << "\n";
        }
    }
    if (all_methods && !agreement) {
        throw CheckFailure("methods disagree for " + args.family + " n=" +
                           std::to_string(args.n));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// check

struct CheckArgs {
    std::string suite;
    std::optional<long> n_max;
    std::optional<std::string> orders;
    std::optional<double> x;
    std::optional<double> alpha;
    std::optional<long> terms;
    std::optional<double> tol;
    std::string format = "plain";
};

void reject_flags(const CheckArgs& args, bool allow_n_max, bool allow_orders,
                  bool allow_genfunc) {
    if (!allow_n_max && args.n_max) {
        throw UsageError("--n-max is not valid for suite '" + args.suite + "'");
    }
    if (!allow_orders && args.orders) {
        throw UsageError("--orders is not valid for suite '" + args.suite + "'");
    }
    if (!allow_genfunc && (args.x || args.alpha || args.terms || args.tol)) {
        throw UsageError("--x/--alpha/--terms/--tol are only valid for suite 'genfunc'");
    }
}

std::vector<Rational> parse_orders(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split_commas(text)) {
        if (part.empty()) {
            throw UsageError("malformed --orders list");
        }
        out.push_back(parse_rational_arg(part, "--orders entry"));
    }
    return out;
}

std::size_t checked_n_max(const CheckArgs& args, long fallback) {
    const long v = args.n_max.value_or(fallback);
    if (v < 0) {
        throw UsageError("--n-max must be nonnegative");
    }
    return static_cast<std::size_t>(v);
}

int cmd_check(const CheckArgs& args) {
    if (args.format != "plain" && args.format != "json") {
        throw UsageError("unknown format '" + args.format + "'");
    }
    std::vector<CheckReport> reports;
    if (args.suite == "hermite") {
        reject_flags(args, true, false, false);
        reports.push_back(check_hermite_consistency(checked_n_max(args, 50)));
    } else if (args.suite == "addition") {
        reject_flags(args, true, false, false);
        reports.push_back(check_addition_theorem(checked_n_max(args, 20)));
    } else if (args.suite == "genfunc") {
        reject_flags(args, false, false, true);
        const long terms = args.terms.value_or(40);
        if (terms < 1) {
            throw UsageError("--terms must be positive");
        }
        reports.push_back(check_generating_function(
            args.x.value_or(0.5), args.alpha.value_or(0.3),
            static_cast<std::size_t>(terms), args.tol.value_or(1e-12)));
    } else if (args.suite == "laguerre") {
        reject_flags(args, true, true, false);
        const std::vector<Rational> orders =
            args.orders ? parse_orders(*args.orders) : default_laguerre_orders();
        reports.push_back(check_laguerre_consistency(checked_n_max(args, 30), orders));
    } else if (args.suite == "operator") {
        reject_flags(args, true, false, false);
        reports.push_back(check_operator_identities(checked_n_max(args, 20)));
    } else if (args.suite == "all") {
        reject_flags(args, false, false, false);
        reports = run_all();
    } else {
        throw UsageError("unknown suite '" + args.suite + "'");
    }

    bool all_passed = true;
    if (args.format == "json") {
        json doc;
        doc["reports"] = json::array();
        for (const auto& rep : reports) {
            json r;
            r["check"] = rep.check_name;
            r["parameters"] = rep.parameters;
            r["passed"] = rep.passed;
            r["first_failure"] = rep.first_failure ? json(*rep.first_failure) : json(nullptr);
            doc["reports"].push_back(std::move(r));
            all_passed = all_passed && rep.passed;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        for (const auto& rep : reports) {
            std::cout << rep << "\n";
            all_passed = all_passed && rep.passed;
        }
    }
    if (!all_passed) {
        throw CheckFailure("one or more checks failed");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// normalize

struct NormalizeArgs {
    std::string expr;
    bool apply_to_constant_flag = false;
};

int cmd_normalize(const NormalizeArgs& args) {
    const OperatorPoly lowered = lower_ast(parse_opexpr(args.expr));
    std::cout << format_canonical(lowered) << "\n";
    if (args.apply_to_constant_flag) {
        std::cout << format_univariate(apply_to_constant(lowered)) << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// eval

struct EvalArgs {
    std::string family;
    long n = 0;
    std::string alpha_text;
    std::string points_text;
    std::string format = "plain";
};

int cmd_eval(const EvalArgs& args) {
    if (args.family != "hermite" && args.family != "laguerre") {
        throw UsageError("unknown family '" + args.family + "'");
    }
    if (args.format != "plain" && args.format != "json" && args.format != "csv") {
        throw UsageError("unknown format '" + args.format + "'");
    }
    std::optional<Rational> alpha;
    if (args.family == "laguerre") {
        if (args.alpha_text.empty()) {
            throw UsageError("missing --alpha (required for laguerre)");
        }
        alpha = parse_rational_arg(args.alpha_text, "--alpha");
    } else if (!args.alpha_text.empty()) {
        throw UsageError("--alpha is only valid for family 'laguerre'");
    }
    if (args.points_text.empty()) {
        throw UsageError("missing --points");
    }
    std::vector<double> points;
    for (const auto& part : split_commas(args.points_text)) {
        points.push_back(parse_point(part));
    }

    const std::size_t n = static_cast<std::size_t>(args.n);
    const UnivariatePoly poly = args.family == "hermite"
                                    ? hermite_recurrence(n)
                                    : laguerre_sum(n, LaguerreOrder(*alpha));
    std::vector<double> values;
    values.reserve(points.size());
    for (const double pt : points) {
        values.push_back(poly_eval_f(poly, pt));
    }

    if (args.format == "json") {
        json doc;
        doc["family"] = args.family;
        doc["n"] = args.n;
        if (alpha) {
            doc["alpha"] = alpha->to_fraction_string();
        }
        doc["values"] = json::array();
        for (std::size_t k = 0; k < points.size(); ++k) {
            doc["values"].push_back(json{{"point", points[k]}, {"value", values[k]}});
        }
        std::cout << doc.dump(2) << "\n";
    } else if (args.format == "csv") {
        std::cout << "# family=" << args.family << ",n=" << args.n;
        if (alpha) {
            std::cout << ",alpha=" << alpha->to_fraction_string();
        }
        std::cout << "\npoint,value\n";
        for (std::size_t k = 0; k < points.size(); ++k) {
            std::cout << detail::format_double(points[k]) << ","
                      << detail::format_double(values[k]) << "\n";
        }
    } else {
        for (std::size_t k = 0; k < points.size(); ++k) {
            std::cout << detail::format_double(points[k]) << " "
                      << detail::format_double(values[k]) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hermite/Laguerre generation and operator-identity checks"};
    app.require_subcommand(1);

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Emit a coefficient table");
    generate->add_option("family", gen.family, "hermite or laguerre")->required();
    generate->add_option("n", gen.n, "polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    generate->add_option("--alpha", gen.alpha_text, "Laguerre order (rational, e.g. 1/2)");
    generate->add_option("--method", gen.method,
                         "operator|rodrigues|recurrence|sum|all (default all)");
    generate->add_option("--format", gen.format, "plain|json|csv (default plain)");

    CheckArgs chk;
    CLI::App* check = app.add_subcommand("check", "Run an identity suite");
    check->add_option("suite", chk.suite,
                      "hermite|addition|genfunc|laguerre|operator|all")
        ->required();
    check->add_option("--n-max", chk.n_max, "largest n (defaults 50/20/30/20 per suite)");
    check->add_option("--orders", chk.orders,
                      "comma-separated rational Laguerre orders");
    check->add_option("--x", chk.x, "generating-function evaluation point (default 0.5)");
    check->add_option("--alpha", chk.alpha, "generating-function parameter (default 0.3)");
    check->add_option("--terms", chk.terms, "partial-sum length (default 40)");
    check->add_option("--tol", chk.tol, "tolerance (default 1e-12)");
    check->add_option("--format", chk.format, "plain|json (default plain)");

    NormalizeArgs norm;
    CLI::App* normalize =
        app.add_subcommand("normalize", "Canonicalize an opexpr-v1 expression");
    normalize->add_option("expr", norm.expr, "expression text")->required();
    normalize->add_flag("--apply-to-constant", norm.apply_to_constant_flag,
                        "also print the operator applied to the constant 1");

    EvalArgs ev;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate a polynomial at points");
    eval->add_option("family", ev.family, "hermite or laguerre")->required();
    eval->add_option("n", ev.n, "polynomial degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--alpha", ev.alpha_text, "Laguerre order (rational)");
    eval->add_option("--points", ev.points_text, "comma-separated decimal points")
        ->required();
    eval->add_option("--format", ev.format, "plain|json|csv (default plain)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (generate->parsed()) {
            return cmd_generate(gen);
        }
        if (check->parsed()) {
            return cmd_check(chk);
        }
        if (normalize->parsed()) {
            return cmd_normalize(norm);
        }
        return cmd_eval(ev);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LowerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CheckFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
