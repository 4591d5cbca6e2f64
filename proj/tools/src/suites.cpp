#include "suites.hpp"

#include "reference_data.hpp"

#include "flatstir/bijection.hpp"
#include "flatstir/count_table.hpp"
#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <utility>

namespace flatstir::cli {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 6> kSuiteNames{{
    {Suite::bijection, "bijection"},
    {Suite::runs, "runs"},
    {Suite::table1, "table1"},
    {Suite::table2, "table2"},
    {Suite::conjectures, "conjectures"},
    {Suite::all, "all"},
}};

std::string str(const BigCount& v) { return to_decimal(v); }
std::string str(std::uint64_t v) { return std::to_string(v); }

std::string order_label(unsigned n) { return "n=" + std::to_string(n); }

// Runs body with timing; a budget overrun is recorded rather than propagated.
VerificationReport timed(std::string suite, const std::function<void(VerificationReport&)>& body) {
    VerificationReport report;
    report.suite = std::move(suite);
    const auto start = std::chrono::steady_clock::now();
    try {
        body(report);
    } catch (const BudgetExceeded& e) {
        report.budget_hit = true;
        report.budget_message = e.what();
    }
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

TableMode resolve_mode(TableSource source, unsigned max_n) {
    switch (source) {
        case TableSource::filter: return TableMode::filter;
        case TableSource::bijection: return TableMode::bijection;
        case TableSource::automatic: break;
    }
    return max_n <= 8 ? TableMode::filter : TableMode::bijection;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view text) noexcept {
    for (const auto& [s, name] : kSuiteNames) {
        if (name == text) return s;
    }
    return std::nullopt;
}

std::string_view to_string(Suite suite) noexcept {
    for (const auto& [s, name] : kSuiteNames) {
        if (s == suite) return name;
    }
    return "?";
}

VerificationReport verify_bijection(unsigned max_n, const SuiteOptions& options) {
    return timed("bijection", [&](VerificationReport& report) {
        for (unsigned order = 1; order <= max_n; ++order) {
            const unsigned n = order - 1;
            const std::string label = "partitions of [-" + std::to_string(n) + "," + std::to_string(n) + "]";
            std::uint64_t total = 0, round_trips = 0, block_counts = 0;
            std::vector<StirlingWord> images;
            for_each_typeb(
                n,
                [&](const TypeBPartition& p) {
                    ++total;
                    StirlingWord w = phi(p, CheckOutput::yes);
                    if (psi(w.view()) == p) ++round_trips;
                    if (run_count_from_partition(p) == run_count(w)) ++block_counts;
                    images.push_back(std::move(w));
                },
                options.budget);
            report.check(label + ": psi(phi(pi)) = pi", str(total), str(round_trips));
            report.check(label + ": run count read off the blocks", str(total), str(block_counts));

            std::sort(images.begin(), images.end());
            const auto distinct =
                static_cast<std::uint64_t>(std::unique(images.begin(), images.end()) - images.begin());
            report.check(label + ": distinct phi images", str(total), str(distinct));

            std::vector<StirlingWord> filtered;
            std::uint64_t inverse_ok = 0;
            for_each_flattened(
                order, 2,
                [&](std::span<const Letter> w) {
                    if (std::ranges::equal(phi(psi(w), CheckOutput::no).view(), w)) ++inverse_ok;
                    filtered.push_back(StirlingWord::assume_valid({w.begin(), w.end()}, 2));
                },
                options.budget);
            report.check("order " + std::to_string(order) + ": phi(psi(w)) = w", str(filtered.size()),
                         str(inverse_ok));
            std::sort(filtered.begin(), filtered.end());
            report.check("order " + std::to_string(order) + ": phi image equals the flattened words",
                         filtered == images, std::to_string(filtered.size()) + " flattened words");
        }
    });
}

VerificationReport verify_runs(unsigned max_n, const SuiteOptions& options) {
    return timed("runs", [&](VerificationReport& report) {
        for (unsigned n = 1; n <= max_n; ++n) {
            const RunHistogram h = tally_flattened_runs(n, 2, options.threads, options.budget);
            report.check(order_label(n) + " largest run count", std::to_string(max_runs(n)),
                         std::to_string(h.max_flattened_runs()));
            const StirlingWord w = max_runs_witness(n);
            report.check(order_label(n) + " witness " + w.to_string(),
                         is_flattened(w) && run_count(w) == max_runs(n) && w.order() == n,
                         std::to_string(run_count(w)) + " runs");
            report.check(order_label(n) + " two-run count against the recurrence", str(flat2_recurrence(n)),
                         str(h.flattened_with_runs(2)));
        }
    });
}

VerificationReport verify_table1(unsigned max_n, const SuiteOptions& options) {
    const TableMode mode = resolve_mode(options.source, max_n);
    return timed("table1/" + std::string(to_string(mode)), [&](VerificationReport& report) {
        const CountTable table = flat_k_table(max_n, mode, options.threads, options.budget);
        for (const auto& row : reference::flat_table()) {
            if (row.n > max_n) break;
            const unsigned n = row.n;
            report.check(order_label(n) + " |Q_n|", str(row.words), str(*table.count({CountKind::stirling, n, 2, 0})));
            report.check(order_label(n) + " |flat|", str(row.flattened), str(*table.count({CountKind::flat, n, 2, 0})));
            const unsigned top = max_runs(n);
            for (unsigned k = 1; k <= top + 1; ++k) {
                const std::uint64_t expected = k <= row.by_runs.size() ? row.by_runs[k - 1] : 0;
                const auto actual = table.count({CountKind::flat_k, n, 2, k});
                report.check(order_label(n) + " k=" + std::to_string(k), str(expected),
                             actual ? str(*actual) : std::string("0"));
            }
        }
        // Rows past the published range: internal consistency only.
        for (unsigned n = static_cast<unsigned>(reference::flat_table().size()) + 1; n <= max_n; ++n) {
            BigCount sum = 0;
            for (unsigned k = 1; k <= max_runs(n); ++k) sum += *table.count({CountKind::flat_k, n, 2, k});
            report.check(order_label(n) + " row sum against D_(n-1)", str(dowling(n - 1)), str(sum));
        }
    });
}

VerificationReport verify_table2(unsigned max_n, const SuiteOptions& options) {
    return timed("table2", [&](VerificationReport& report) {
        const unsigned top = std::min(max_n, reference::kMStirlingMaxN);
        const CountTable table =
            mstirling_table(top, reference::kMStirlingMinM, reference::kMStirlingMaxM, options.threads, options.budget);
        for (unsigned m = reference::kMStirlingMinM; m <= reference::kMStirlingMaxM; ++m) {
            for (unsigned n = 1; n <= top; ++n) {
                report.check(order_label(n) + " m=" + std::to_string(m), str(reference::mstirling_flat(n, m)),
                             str(*table.count({CountKind::mstirling_flat, n, m, 0})));
            }
        }
    });
}

VerificationReport verify_conjectures(unsigned max_n, const SuiteOptions& options) {
    return timed("conjectures", [&](VerificationReport& report) {
        // Three-run closed form against bijective enumeration.
        for (unsigned n = 1; n <= max_n; ++n) {
            const RunHistogram h = tally_flattened_runs_via_bijection(n, options.threads, options.budget);
            report.check(order_label(n) + " three-run closed form", str(h.flattened_with_runs(3)),
                         str(flat3_conjecture(n)));
        }
        // m-Stirling recurrence and series against the published table.
        for (unsigned m = reference::kMStirlingMinM; m <= reference::kMStirlingMaxM; ++m) {
            for (unsigned n = 1; n <= reference::kMStirlingMaxN; ++n) {
                const BigCount rec = flatm_recurrence(n, m);
                const std::string cell = order_label(n) + " m=" + std::to_string(m);
                report.check(cell + " recurrence", str(reference::mstirling_flat(n, m)), str(rec));
                report.check(cell + " series", str(rec), str(flatm_series(n, m)));
            }
        }
        for (unsigned n = 1; n <= std::max(12u, max_n); ++n) {
            report.check(order_label(n) + " recurrence at m=2 against D_(n-1)", str(dowling(n - 1)),
                         str(flatm_recurrence(n, 2)));
        }
        for (unsigned n = 1; n <= 30; ++n) {
            report.check(order_label(n) + " two-run closed form against the recurrence",
                         str(flat2_recurrence(n + 1)), str(flat2_closed(n)));
        }
    });
}

VerificationReport run_suite(Suite suite, unsigned max_n, const SuiteOptions& options) {
    switch (suite) {
        case Suite::bijection: return verify_bijection(max_n, options);
        case Suite::runs: return verify_runs(max_n, options);
        case Suite::table1: return verify_table1(max_n, options);
        case Suite::table2: return verify_table2(max_n, options);
        case Suite::conjectures: return verify_conjectures(max_n, options);
        case Suite::all: break;
    }
    VerificationReport combined;
    combined.suite = "all";
    for (Suite s : {Suite::bijection, Suite::runs, Suite::table1, Suite::table2, Suite::conjectures}) {
        combined.absorb(run_suite(s, max_n, options));
    }
    return combined;
}

}  // namespace flatstir::cli
