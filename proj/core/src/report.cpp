#include "debruijn/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace debruijn {

void RunReport::input(std::string name, std::string value) {
    inputs.emplace_back(std::move(name), std::move(value));
}

void RunReport::result(std::string name, std::string value, std::string provenance) {
    results.push_back({std::move(name), std::move(value), std::move(provenance)});
}

void RunReport::result(std::string name, const BigInt& value, std::string provenance) {
    result(std::move(name), to_decimal(value), std::move(provenance));
}

void RunReport::result(std::string name, const Rational& value, std::string provenance) {
    result(std::move(name), to_decimal(value), std::move(provenance));
}

void RunReport::check(std::string name, bool pass, std::string detail) {
    checks.push_back({std::move(name), pass, std::move(detail)});
}

bool RunReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string emit_text(const RunReport& r) {
    std::ostringstream os;
    os << "== " << r.command << "\n";
    for (const auto& [name, value] : r.inputs) os << "input  " << name << " = " << value << "\n";
    for (const auto& v : r.results)
        os << "result " << v.name << " = " << v.value << "   [" << v.provenance << "]\n";
    for (const auto& c : r.checks) {
        os << "check  " << (c.pass ? "PASS" : "FAIL") << " " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
    }
    os << "time   " << r.wall_ms << " ms\n";
    return os.str();
}

std::string emit_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["inputs"] = nlohmann::ordered_json::object();
    for (const auto& [name, value] : r.inputs) j["inputs"][name] = value;
    j["results"] = nlohmann::ordered_json::array();
    for (const auto& v : r.results)
        j["results"].push_back({{"name", v.name}, {"value", v.value}, {"provenance", v.provenance}});
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : r.checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["wall_ms"] = r.wall_ms;
    return j.dump(2) + "\n";
}

}  // namespace

std::string emit_report(const RunReport& report, ReportFormat format) {
    return format == ReportFormat::text ? emit_text(report) : emit_json(report);
}

}  // namespace debruijn
