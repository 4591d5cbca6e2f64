#include "flatstir/bijection.hpp"
#include "flatstir/count_table.hpp"
#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <algorithm>

namespace flatstir {

std::string_view to_string(TableMode mode) noexcept {
    return mode == TableMode::filter ? "filter" : "bijection";
}

std::optional<TableMode> parse_table_mode(std::string_view text) noexcept {
    if (text == "filter") return TableMode::filter;
    if (text == "bijection") return TableMode::bijection;
    return std::nullopt;
}

CountTable flat_k_table(unsigned n_max, TableMode mode, unsigned threads, const EnumerationBudget& budget) {
    if (n_max == 0) throw DomainError("flat_k_table needs n_max >= 1");
    // Check the largest row up front so a too-large request fails before any work.
    if (mode == TableMode::filter) {
        require_within_budget(stirling_word_count(n_max, 2), budget, "flat_k_table(filter)");
    } else {
        require_within_budget(dowling(n_max - 1), budget, "flat_k_table(bijection)");
    }

    CountTable table;
    for (unsigned n = 1; n <= n_max; ++n) {
        RunHistogram h;
        if (mode == TableMode::filter) {
            h = tally_flattened_runs(n, 2, threads, budget);
            table.record({CountKind::stirling, n, 2, 0}, h.words, Provenance::enumeration);
        } else {
            h = tally_flattened_runs_via_bijection(n, threads, budget);
            table.record({CountKind::stirling, n, 2, 0}, stirling_word_count(n, 2), Provenance::formula);
        }
        table.record({CountKind::flat, n, 2, 0}, h.flattened, Provenance::enumeration);
        const std::size_t top = std::max<std::size_t>(max_runs(n), h.max_flattened_runs());
        for (std::size_t k = 1; k <= top; ++k) {
            table.record({CountKind::flat_k, n, 2, static_cast<unsigned>(k)}, h.flattened_with_runs(k),
                         Provenance::enumeration);
        }
    }
    return table;
}

CountTable mstirling_table(unsigned n_max, unsigned m_min, unsigned m_max, unsigned threads,
                           const EnumerationBudget& budget) {
    if (m_min == 0 || m_min > m_max) throw DomainError("mstirling_table needs 1 <= m_min <= m_max");
    if (m_max > kMaxOrder) throw DomainError("mstirling_table: m too large");
    for (unsigned m = m_min; m <= m_max; ++m) {
        require_within_budget(stirling_word_count(n_max, m), budget, "mstirling_table");
    }
    CountTable table;
    for (unsigned m = m_min; m <= m_max; ++m) {
        for (unsigned n = 1; n <= n_max; ++n) {
            const RunHistogram h = tally_flattened_runs(n, m, threads, budget);
            table.record({CountKind::stirling, n, m, 0}, h.words, Provenance::enumeration);
            table.record({CountKind::mstirling_flat, n, m, 0}, h.flattened, Provenance::enumeration);
        }
    }
    return table;
}

BigCount CountDeriver::derive(const CountKey& key) {
    auto need_m2 = [&] {
        if (key.m != 2) throw DomainError(describe(key) + ": this kind is only defined for m = 2");
    };
    switch (key.kind) {
        case CountKind::stirling:
            return mstirling_count(key.n, key.m);
        case CountKind::typeb:
            return dowling(key.n);
        case CountKind::flat:
            need_m2();
            return key.n == 0 ? BigCount(1) : dowling(key.n - 1);
        case CountKind::mstirling_flat:
            if (key.m < 2) throw DomainError(describe(key) + ": needs m >= 2");
            return flatm_recurrence(key.n, key.m);
        case CountKind::flat_k: {
            need_m2();
            if (key.n == 0) return key.k == 0 ? 1 : 0;
            auto it = histograms_.find(key.n);
            if (it == histograms_.end()) {
                const RunHistogram h = tally_flattened_runs_via_bijection(key.n, threads_, budget_);
                it = histograms_.emplace(key.n, h.flattened_by_runs).first;
            }
            return key.k < it->second.size() ? it->second[key.k] : 0;
        }
    }
    throw DomainError("unknown count kind");
}

std::vector<CoherenceIssue> check_coherence(const CountTable& table, CountDeriver& deriver) {
    std::vector<CoherenceIssue> issues;
    for (const auto& [key, entry] : table.entries()) {
        BigCount derived = deriver.derive(key);
        if (derived != entry.count) {
            issues.push_back({key, entry.count, derived,
                              describe(key) + ": cached " + to_decimal(entry.count) + ", re-derived " +
                                  to_decimal(derived)});
        }
    }
    return issues;
}

CountTable load_verified(const std::filesystem::path& path, CountDeriver& deriver) {
    CountTable table = CountTable::load(path);
    const auto issues = check_coherence(table, deriver);
    if (!issues.empty()) throw CoherenceError(issues.front().message);
    return table;
}

}  // namespace flatstir
