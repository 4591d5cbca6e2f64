#pragma once

// Keyed store of exact counts with provenance, persisted as versioned JSON:
//
//   {"version": 1, "entries": [{"kind": "flat_k", "n": 5, "m": 2, "k": 3,
//                               "count": "70", "provenance": "enumeration"}, ...]}
//
// Key conventions: stirling (n, m, 0) = |Q_n^m|; flat (n, 2, 0) = |flat(Q_n)|;
// flat_k (n, 2, k); typeb (n, 0, 0) = D_n; mstirling_flat (n, m, 0).
// A table has a single writer; concurrent record() calls need external locking.

#include "flatstir/bigcount.hpp"
#include "flatstir/budget.hpp"

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace flatstir {

enum class CountKind { stirling, flat, flat_k, typeb, mstirling_flat };
enum class Provenance { formula, enumeration, cached };

std::string_view to_string(CountKind kind) noexcept;
std::string_view to_string(Provenance provenance) noexcept;
std::optional<CountKind> parse_count_kind(std::string_view text) noexcept;
std::optional<Provenance> parse_provenance(std::string_view text) noexcept;

struct CountKey {
    CountKind kind = CountKind::flat;
    unsigned n = 0;
    unsigned m = 2;
    unsigned k = 0;

    friend auto operator<=>(const CountKey&, const CountKey&) = default;
};

std::string describe(const CountKey& key);

struct CountEntry {
    BigCount count;
    Provenance provenance = Provenance::formula;

    friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

class CountTable {
public:
    static constexpr int kVersion = 1;

    /// Inserts, or confirms an existing entry. A differing count throws
    /// CoherenceError and leaves the table unchanged.
    void record(const CountKey& key, const BigCount& count, Provenance provenance);

    std::optional<BigCount> count(const CountKey& key) const;
    const CountEntry* find(const CountKey& key) const;

    const std::map<CountKey, CountEntry>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// Merges `other`, applying the same coherence rule as record().
    void merge(const CountTable& other);

    std::string to_json() const;
    /// Throws ParseError on malformed documents, unknown versions or kinds,
    /// and CoherenceError on duplicate keys with different counts.
    static CountTable from_json(std::string_view text);

    void save(const std::filesystem::path& path) const;
    static CountTable load(const std::filesystem::path& path);

    friend bool operator==(const CountTable&, const CountTable&) = default;

private:
    std::map<CountKey, CountEntry> entries_;
};

// ---------------------------------------------------------------------------
// Table builders

enum class TableMode { filter, bijection };

std::string_view to_string(TableMode mode) noexcept;
std::optional<TableMode> parse_table_mode(std::string_view text) noexcept;

/// |Q_n|, |flat(Q_n)| and |flat_k(Q_n)| for 1 <= n <= n_max and 1 <= k <= max_runs(n).
/// filter: exhaustive walk of Q_n (|Q_n| counted); bijection: phi over the
/// type B partitions of [-(n-1), n-1] (|Q_n| from the formula).
CountTable flat_k_table(unsigned n_max, TableMode mode, unsigned threads = 0,
                        const EnumerationBudget& budget = {});

/// Exhaustive |flat(Q_n^m)| and |Q_n^m| for 1 <= n <= n_max, m_min <= m <= m_max.
CountTable mstirling_table(unsigned n_max, unsigned m_min, unsigned m_max, unsigned threads = 0,
                           const EnumerationBudget& budget = {});

/// Re-derives single entries. flat_k values come from bijective enumeration
/// (memoized per n); everything else has an exact formula.
class CountDeriver {
public:
    explicit CountDeriver(unsigned threads = 0, EnumerationBudget budget = {})
        : threads_(threads), budget_(budget) {}

    BigCount derive(const CountKey& key);

private:
    unsigned threads_;
    EnumerationBudget budget_;
    std::map<unsigned, std::vector<std::uint64_t>> histograms_;
};

struct CoherenceIssue {
    CountKey key;
    BigCount cached;
    BigCount derived;
    std::string message;
};

/// Every entry whose re-derivation disagrees with the stored count.
std::vector<CoherenceIssue> check_coherence(const CountTable& table, CountDeriver& deriver);

/// Loads a table and re-derives every entry; the first disagreement throws
/// CoherenceError naming the entry.
CountTable load_verified(const std::filesystem::path& path, CountDeriver& deriver);

}  // namespace flatstir
