#pragma once

// (m-)Stirling words: validation, run statistics, text format and the
// insertion-order generators.
//
// A word on {1^m, ..., n^m} is m-Stirling when every letter strictly between
// the first and last copy of v is larger than v (other copies of v aside).
// Words are stored as small fixed-width letters; orders above kMaxOrder are
// rejected at the boundary.

#include "flatstir/bigcount.hpp"
#include "flatstir/budget.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatstir {

using Letter = std::uint8_t;
inline constexpr unsigned kMaxOrder = 255;

/// Returns a description of the first violated rule, or nullopt for a valid
/// m-Stirling word. The empty word is valid (order 0).
std::optional<std::string> stirling_violation(std::span<const Letter> letters, unsigned m);

inline bool is_stirling(std::span<const Letter> letters, unsigned m) {
    return !stirling_violation(letters, m).has_value();
}

class StirlingWord {
public:
    StirlingWord() = default;

    /// Validates; throws DomainError naming the violation.
    static StirlingWord from_letters(std::vector<Letter> letters, unsigned multiplicity = 2);

    /// Skips validation. For generators whose output is valid by construction.
    static StirlingWord assume_valid(std::vector<Letter> letters, unsigned multiplicity);

    /// Parses canonical or compact text (see parse_word) and validates.
    static StirlingWord parse(std::string_view text, unsigned multiplicity = 2);

    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::span<const Letter> view() const noexcept { return letters_; }
    unsigned order() const noexcept { return multiplicity_ == 0 ? 0 : static_cast<unsigned>(letters_.size() / multiplicity_); }
    unsigned multiplicity() const noexcept { return multiplicity_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    std::string to_string() const;

    friend bool operator==(const StirlingWord&, const StirlingWord&) = default;
    friend auto operator<=>(const StirlingWord& a, const StirlingWord& b) {
        return a.letters_ <=> b.letters_;
    }

private:
    StirlingWord(std::vector<Letter> letters, unsigned multiplicity)
        : letters_(std::move(letters)), multiplicity_(multiplicity) {}

    std::vector<Letter> letters_;
    unsigned multiplicity_ = 2;
};

// ---------------------------------------------------------------------------
// Runs and descents

/// Maximal weakly increasing segments, as half-open index ranges.
struct RunDecomposition {
    std::vector<std::pair<std::size_t, std::size_t>> segments;
    std::vector<Letter> leading_terms;

    std::size_t run_count() const noexcept { return segments.size(); }
};

RunDecomposition run_decomposition(std::span<const Letter> word);

/// Number of i with w[i] > w[i+1].
std::size_t descent_count(std::span<const Letter> word) noexcept;

/// descent_count + 1, and 0 for the empty word.
std::size_t run_count(std::span<const Letter> word) noexcept;

/// Leading terms of the runs are weakly increasing. The empty word is flattened.
bool is_flattened(std::span<const Letter> word) noexcept;

/// Run count when flattened, 0 otherwise. One pass.
std::size_t flattened_run_count(std::span<const Letter> word) noexcept;

inline RunDecomposition run_decomposition(const StirlingWord& w) { return run_decomposition(w.view()); }
inline std::size_t descent_count(const StirlingWord& w) noexcept { return descent_count(w.view()); }
inline std::size_t run_count(const StirlingWord& w) noexcept { return run_count(w.view()); }
inline bool is_flattened(const StirlingWord& w) noexcept { return is_flattened(w.view()); }

// ---------------------------------------------------------------------------
// Text format
//
// Canonical: decimal letters separated by single spaces ("1 1 2 2 10 10 ...").
// Compact input ("11223344") is accepted when the text has no whitespace;
// every character is then one letter, so it only covers letters 1..9.

/// Throws ParseError with the byte offset of the offending character.
std::vector<Letter> parse_word(std::string_view text);

std::string format_word(std::span<const Letter> word);

// ---------------------------------------------------------------------------
// Generation
//
// Order n words come from order n-1 words by inserting the block of m copies
// of n into each of the (n-1)m + 1 gaps, gaps taken left to right. Every
// word appears exactly once; the traversal is depth first, so the emitted
// order is the insertion order applied recursively.

/// |Q_n^m| = prod_{i<n} (i m + 1).
BigCount stirling_word_count(unsigned n, unsigned m);

namespace detail {

class InsertionWalker {
public:
    InsertionWalker(unsigned n, unsigned m);

    /// Places values 1..gaps.size() using the recorded gap choices.
    void seed(std::span<const std::size_t> gaps);

    template <class Visitor>
    void walk(Visitor& visit) {
        recurse(next_value_, length_, visit);
    }

private:
    template <class Visitor>
    void recurse(unsigned value, std::size_t length, Visitor& visit) {
        if (value > n_) {
            visit(std::span<const Letter>(buffer_.data(), length));
            return;
        }
        const Letter letter = static_cast<Letter>(value);
        for (std::size_t gap = 0; gap <= length; ++gap) {
            insert_block(gap, length, letter);
            recurse(value + 1, length + m_, visit);
            remove_block(gap, length);
        }
    }

    void insert_block(std::size_t gap, std::size_t length, Letter letter) noexcept;
    void remove_block(std::size_t gap, std::size_t length) noexcept;

    unsigned n_;
    unsigned m_;
    unsigned next_value_ = 1;
    std::size_t length_ = 0;
    std::vector<Letter> buffer_;
};

void validate_generation_args(unsigned n, unsigned m, const EnumerationBudget& budget);

}  // namespace detail

/// Calls visit(std::span<const Letter>) for every word of Q_n^m in insertion
/// order. The span is only valid during the call.
template <class Visitor>
void for_each_stirling(unsigned n, unsigned m, Visitor&& visit,
                       const EnumerationBudget& budget = {}) {
    detail::validate_generation_args(n, m, budget);
    detail::InsertionWalker walker(n, m);
    walker.walk(visit);
}

/// Filtered form of for_each_stirling: only flattened words are visited.
template <class Visitor>
void for_each_flattened(unsigned n, unsigned m, Visitor&& visit,
                        const EnumerationBudget& budget = {}) {
    for_each_stirling(
        n, m,
        [&](std::span<const Letter> w) {
            if (is_flattened(w)) visit(w);
        },
        budget);
}

std::vector<StirlingWord> generate_stirling(unsigned n, unsigned m,
                                            const EnumerationBudget& budget = {});
std::vector<StirlingWord> generate_flattened_filter(unsigned n, unsigned m,
                                                    const EnumerationBudget& budget = {});

/// Exhaustive tally over Q_n^m.
struct RunHistogram {
    std::uint64_t words = 0;
    std::uint64_t flattened = 0;
    std::vector<std::uint64_t> flattened_by_runs;  ///< index = number of runs

    std::size_t max_flattened_runs() const noexcept;
    std::uint64_t flattened_with_runs(std::size_t k) const noexcept {
        return k < flattened_by_runs.size() ? flattened_by_runs[k] : 0;
    }
    RunHistogram& operator+=(const RunHistogram& other);
};

/// Splits the first insertion choices across `threads` workers (0 = all
/// hardware threads) and sums their histograms.
RunHistogram tally_flattened_runs(unsigned n, unsigned m, unsigned threads = 0,
                                  const EnumerationBudget& budget = {});

}  // namespace flatstir
