#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <vector>

namespace flatstir::cli {

struct VerificationCase {
    std::string description;
    std::string expected;
    std::string actual;
    bool passed = false;
};

struct VerificationReport {
    std::string suite;
    std::vector<VerificationCase> cases;
    std::chrono::duration<double> elapsed{0};
    bool budget_hit = false;
    std::string budget_message;

    void check(std::string description, const std::string& expected, const std::string& actual);
    void check(std::string description, bool ok, const std::string& detail = {});

    std::size_t failures() const noexcept;
    bool passed() const noexcept { return !budget_hit && failures() == 0; }

    /// Appends another report's cases under this suite (elapsed is summed).
    void absorb(const VerificationReport& other);

    /// Case lines, a summary line, and elapsed time on its own marked line.
    void render(std::ostream& out) const;
};

}  // namespace flatstir::cli
