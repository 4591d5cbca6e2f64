#pragma once

// The bijection between type B set partitions of [-n, n] and flattened
// Stirling permutations of order n + 1.
//
//   phi(pi) = g(h(P_0)) f(h(N_1)) g(h(P_1)) ... f(h(N_m)) g(h(P_m))
//
// h shifts magnitudes up by one, f doubles each letter in ascending order and
// g wraps the doubled tail of a set with its minimum. psi undoes phi by
// peeling P- and N-segments off the right end of the word.

#include "flatstir/errors.hpp"
#include "flatstir/stirling.hpp"
#include "flatstir/typeb.hpp"

#include <span>
#include <vector>

namespace flatstir {

/// {|i| + 1 : i in S}, sorted, duplicates collapsed.
std::vector<unsigned> map_h(std::span<const int> set);

/// s1 s1 s2 s2 ... sk sk for S = {s1 < ... < sk}; the input need not be sorted.
std::vector<Letter> map_f(std::span<const unsigned> set);

/// s1 s2 s2 ... sk sk s1 for S = {s1 < ... < sk}; the input need not be sorted.
std::vector<Letter> map_g(std::span<const unsigned> set);

enum class CheckOutput { no, yes };

#ifdef NDEBUG
inline constexpr CheckOutput kDefaultPhiCheck = CheckOutput::no;
#else
inline constexpr CheckOutput kDefaultPhiCheck = CheckOutput::yes;
#endif

/// Validates the input (CanonicalError). With CheckOutput::yes the result is
/// re-checked to be a flattened Stirling word of order n + 1; a failure there
/// is a std::logic_error.
StirlingWord phi(const TypeBPartition& partition, CheckOutput check = kDefaultPhiCheck);

/// Appends phi(partition) to `out` without any validation.
void append_phi(const TypeBPartition& partition, std::vector<Letter>& out);

/// Inverse of phi on flattened Stirling words (multiplicity 2, order >= 1).
/// Throws DomainError for non-Stirling or non-flattened input.
TypeBPartition psi(std::span<const Letter> word);

/// Also rejects words whose multiplicity is not 2.
TypeBPartition psi(const StirlingWord& word);

/// 1 + #{i >= 1 : N_i nonempty} + #{i >= 0 : |P_i| >= 2}, the zero-block included.
std::size_t run_count_from_partition(const TypeBPartition& partition) noexcept;

/// Visits phi(pi) for every pi of [-(n-1), n-1], i.e. all of flat(Q_n), in the
/// type B generation order. The span is only valid during the call.
template <class Visitor>
void for_each_flattened_via_bijection(unsigned n, Visitor&& visit, const EnumerationBudget& budget = {}) {
    if (n == 0) throw DomainError("bijective generation needs order >= 1");
    std::vector<Letter> buffer;
    buffer.reserve(2 * static_cast<std::size_t>(n));
    for_each_typeb(
        n - 1,
        [&](const TypeBPartition& p) {
            buffer.clear();
            append_phi(p, buffer);
            visit(std::span<const Letter>(buffer));
        },
        budget);
}

std::vector<StirlingWord> generate_flattened_via_bijection(unsigned n, const EnumerationBudget& budget = {});

/// Run-count histogram of flat(Q_n) built from phi images, sharded over
/// zero-block supports. `words` equals `flattened` here.
RunHistogram tally_flattened_runs_via_bijection(unsigned n, unsigned threads = 0,
                                                const EnumerationBudget& budget = {});

}  // namespace flatstir
