#pragma once

// Type B set partitions of [-n, n] in Adler canonical form.
//
// A partition is stored as its zero-block (nonnegative part only) followed by
// one representative per block pair: the mate with the smaller minimal
// positive element. Negative elements are kept as magnitudes, so every value
// of [0, n] appears exactly once across the structure.

#include "flatstir/budget.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

namespace flatstir {

/// Largest n accepted by generators; phi maps [-n, n] onto letters 1..n+1.
inline constexpr unsigned kMaxTypeBOrder = 254;

/// One canonical non-zero block N_i P_i.
struct SignedBlock {
    std::vector<unsigned> negatives;  ///< magnitudes of N_i, ascending (values descending)
    std::vector<unsigned> positives;  ///< P_i, ascending, nonempty

    friend bool operator==(const SignedBlock&, const SignedBlock&) = default;
};

struct TypeBPartition {
    unsigned n = 0;
    std::vector<unsigned> zero_block{0};  ///< P_0, ascending, starts with 0
    std::vector<SignedBlock> blocks;      ///< ordered by min(P_i)

    friend bool operator==(const TypeBPartition&, const TypeBPartition&) = default;
};

enum class CanonicalRule {
    zero_block_missing_zero,
    zero_block_has_negative,
    zero_block_not_increasing,
    zero_outside_zero_block,
    empty_positives,
    negatives_not_decreasing,
    positives_not_increasing,
    negative_after_positive,
    min_magnitude_rule,
    blocks_not_ordered,
    magnitude_repeated,
    magnitude_missing,
    magnitude_out_of_range,
};

std::string_view rule_name(CanonicalRule rule) noexcept;

struct CanonicalDiagnostic {
    CanonicalRule rule;
    std::string message;
};

struct CanonicalReport {
    std::vector<CanonicalDiagnostic> diagnostics;

    bool valid() const noexcept { return diagnostics.empty(); }
    bool has(CanonicalRule rule) const noexcept;
    std::string summary() const;
};

CanonicalReport validate_canonical(const TypeBPartition& candidate);

/// Raised by operations that require canonical input, and by parse_adler when
/// the text is syntactically fine but breaks a canonical rule.
class CanonicalError : public std::invalid_argument {
public:
    explicit CanonicalError(CanonicalReport report)
        : std::invalid_argument("non-canonical type B partition: " + report.summary()),
          report_(std::move(report)) {}

    const CanonicalReport& report() const noexcept { return report_; }

private:
    CanonicalReport report_;
};

/// A set partition of [-n, n] given as explicit signed blocks.
using FullPartition = std::vector<std::vector<int>>;

/// Which of the five defining conditions a family of blocks fails.
class NotTypeBPartition : public std::invalid_argument {
public:
    NotTypeBPartition(int condition, const std::string& message)
        : std::invalid_argument("not a type B set partition (condition " +
                                std::to_string(condition) + "): " + message),
          condition_(condition) {}

    int condition() const noexcept { return condition_; }

private:
    int condition_;
};

/// The zero-block closed under negation, then each block followed by its
/// negation. Blocks are sorted ascending. Throws CanonicalError.
FullPartition expand(const TypeBPartition& partition);

/// Checks the five conditions and applies the canonical ordering.
/// Accepts blocks and elements in any order. Throws NotTypeBPartition.
TypeBPartition canonicalize(const FullPartition& blocks);

/// Builds the structure from signed blocks (first block = zero-block) in the
/// order given, and validates it. Ordering mistakes inside a block are
/// reported, never repaired. Throws CanonicalError.
TypeBPartition from_signed_blocks(const FullPartition& blocks);

/// Signed elements of a canonical block in display order.
std::vector<int> signed_elements(const SignedBlock& block);

inline std::size_t block_pair_count(const TypeBPartition& partition) noexcept {
    return partition.blocks.size();
}

// ---------------------------------------------------------------------------
// Adler text
//
//   partition := block (' | ' block)*
//   block     := element (' ' element)*
//   element   := '-'? nonzero-decimal | '0'
//
// Spaces around '|' and between elements may repeat on input; output uses
// single spaces.

/// Throws ParseError (syntax) or CanonicalError (well-formed but non-canonical).
TypeBPartition parse_adler(std::string_view text);

/// Syntax only: the signed blocks as written.
FullPartition parse_adler_blocks(std::string_view text);

std::string format_adler(const TypeBPartition& partition);

// ---------------------------------------------------------------------------
// Generation
//
// Order: zero-block supports in lexicographic order of their sorted element
// lists; the remaining elements (ascending) in restricted-growth-string order;
// then signs of the non-minimal elements of the blocks in binary counting
// order, bit j set meaning the j-th smallest such element is negative.

namespace detail {
using TypeBCallback = void (*)(const TypeBPartition&, void*);
/// Visits the partitions whose zero-block support ordinal is congruent to
/// `shard` modulo `shard_count`.
void for_each_typeb_impl(unsigned n, unsigned shard, unsigned shard_count, TypeBCallback callback,
                         void* context);
void validate_typeb_args(unsigned n, const EnumerationBudget& budget);
}  // namespace detail

/// Calls visit(const TypeBPartition&) for every canonical partition of
/// [-n, n]. The reference is only valid during the call.
template <class Visitor>
void for_each_typeb(unsigned n, Visitor&& visit, const EnumerationBudget& budget = {}) {
    detail::validate_typeb_args(n, budget);
    using V = std::remove_reference_t<Visitor>;
    detail::for_each_typeb_impl(
        n, 0, 1, [](const TypeBPartition& p, void* ctx) { (*static_cast<V*>(ctx))(p); },
        const_cast<void*>(static_cast<const void*>(std::addressof(visit))));
}

/// One shard of the zero-block partitioning used by parallel callers.
/// The union over shard = 0..shard_count-1 is the full stream.
template <class Visitor>
void for_each_typeb_shard(unsigned n, unsigned shard, unsigned shard_count, Visitor&& visit) {
    using V = std::remove_reference_t<Visitor>;
    detail::for_each_typeb_impl(
        n, shard, shard_count, [](const TypeBPartition& p, void* ctx) { (*static_cast<V*>(ctx))(p); },
        const_cast<void*>(static_cast<const void*>(std::addressof(visit))));
}

std::vector<TypeBPartition> generate_typeb(unsigned n, const EnumerationBudget& budget = {});

}  // namespace flatstir
