#include "report.hpp"

#include <iomanip>
#include <ostream>

namespace flatstir::cli {

void VerificationReport::check(std::string description, const std::string& expected, const std::string& actual) {
    cases.push_back({std::move(description), expected, actual, expected == actual});
}

void VerificationReport::check(std::string description, bool ok, const std::string& detail) {
    cases.push_back({std::move(description), "true", ok ? "true" : "false" + (detail.empty() ? "" : " (" + detail + ")"), ok});
}

std::size_t VerificationReport::failures() const noexcept {
    std::size_t count = 0;
    for (const auto& c : cases) count += c.passed ? 0 : 1;
    return count;
}

void VerificationReport::absorb(const VerificationReport& other) {
    for (const auto& c : other.cases) {
        cases.push_back(c);
        cases.back().description = other.suite + ": " + c.description;
    }
    elapsed += other.elapsed;
    if (other.budget_hit) {
        budget_hit = true;
        if (budget_message.empty()) budget_message = other.budget_message;
    }
}

void VerificationReport::render(std::ostream& out) const {
    out << "suite " << suite << "\n";
    for (const auto& c : cases) {
        out << (c.passed ? "  PASS " : "  FAIL ") << c.description;
        if (c.passed) {
            out << " = " << c.actual << "\n";
        } else {
            out << ": expected " << c.expected << ", got " << c.actual << "\n";
        }
    }
    if (budget_hit) out << "  BUDGET " << budget_message << "\n";
    out << "result " << (passed() ? "PASS" : "FAIL") << " (" << cases.size() << " cases, " << failures()
        << " failed" << (budget_hit ? ", budget exceeded" : "") << ")\n";
    out << "[timing] elapsed_seconds " << std::fixed << std::setprecision(3) << elapsed.count() << "\n";
    out << std::defaultfloat;
}

}  // namespace flatstir::cli
