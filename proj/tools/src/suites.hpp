#pragma once

// Verification suites behind `flatstirling verify`. In every suite max_n is
// the largest word order examined; the bijection suite therefore covers type B
// partitions of [-n, n] for n < max_n.

#include "report.hpp"

#include "flatstir/budget.hpp"

#include <optional>
#include <string_view>

namespace flatstir::cli {

enum class Suite { bijection, runs, table1, table2, conjectures, all };

std::optional<Suite> parse_suite(std::string_view text) noexcept;
std::string_view to_string(Suite suite) noexcept;

/// `auto` picks the filter path up to order 8 and the bijection beyond.
enum class TableSource { automatic, filter, bijection };

struct SuiteOptions {
    unsigned threads = 0;
    EnumerationBudget budget{};
    TableSource source = TableSource::automatic;
};

VerificationReport verify_bijection(unsigned max_n, const SuiteOptions& options = {});
VerificationReport verify_runs(unsigned max_n, const SuiteOptions& options = {});
VerificationReport verify_table1(unsigned max_n, const SuiteOptions& options = {});
VerificationReport verify_table2(unsigned max_n, const SuiteOptions& options = {});
VerificationReport verify_conjectures(unsigned max_n, const SuiteOptions& options = {});

VerificationReport run_suite(Suite suite, unsigned max_n, const SuiteOptions& options = {});

}  // namespace flatstir::cli
