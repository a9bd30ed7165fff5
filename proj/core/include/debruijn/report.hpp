#pragma once

#include "debruijn/numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace debruijn {

/// Structured outcome of one CLI command: echoed inputs, named exact
/// results with provenance, and named pass/fail checks. Identical
/// invocations produce byte-identical output apart from the wall-time
/// field.
struct RunReport {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;

    struct Value {
        std::string name;
        std::string value;  // full decimal; rationals as "n/d"
        std::string provenance;
    };
    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };

    std::vector<Value> results;
    std::vector<Check> checks;
    double wall_ms = 0.0;

    void input(std::string name, std::string value);
    void result(std::string name, std::string value, std::string provenance);
    void result(std::string name, const BigInt& value, std::string provenance);
    void result(std::string name, const Rational& value, std::string provenance);
    void check(std::string name, bool pass, std::string detail = {});

    bool all_passed() const;
};

enum class ReportFormat { text, json };

std::string emit_report(const RunReport& report, ReportFormat format);

}  // namespace debruijn
