#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace weylpoly {

/// Outcome of one identity check. passed is true exactly when first_failure
/// is absent; failure text always names the smallest failing index.
struct CheckReport {
    std::string check_name;
    std::map<std::string, std::string> parameters;
    bool passed = true;
    std::optional<std::string> first_failure;

    static CheckReport pass(std::string name, std::map<std::string, std::string> params) {
        CheckReport r;
        r.check_name = std::move(name);
        r.parameters = std::move(params);
        r.passed = true;
        return r;
    }

    static CheckReport fail(std::string name, std::map<std::string, std::string> params,
                            std::string failure) {
        CheckReport r;
        r.check_name = std::move(name);
        r.parameters = std::move(params);
        r.passed = false;
        r.first_failure = std::move(failure);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const CheckReport& r) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name;
        if (!r.parameters.empty()) {
            os << " (";
            bool first = true;
            for (const auto& [key, value] : r.parameters) {
                if (!first) {
                    os << ", ";
                }
                first = false;
                os << key << "=" << value;
            }
            os << ")";
        }
        if (r.first_failure) {
            os << ": " << *r.first_failure;
        }
        return os;
    }
};

}  // namespace weylpoly
