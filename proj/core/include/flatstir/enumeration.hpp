#pragma once

// Exact counting formulas for Stirling words, type B partitions and
// flattened words. Everything returns BigCount; flatm_series is the only
// routine that goes through (certified) rational approximation.

#include "flatstir/bigcount.hpp"
#include "flatstir/stirling.hpp"

namespace flatstir {

/// (2n-1)!! = 1 * 3 * ... * (2n-1); 1 for n = 0.
BigCount double_factorial(unsigned n);

BigCount binomial(unsigned n, unsigned k);

/// Stirling numbers of the second kind, S(0,0) = 1 and S(a,0) = 0 for a >= 1.
BigCount stirling2(unsigned a, unsigned b);

/// Dowling number D_n = sum_i C(n,i) sum_k 2^(n-i-k) S(n-i,k).
BigCount dowling(unsigned n);

/// |flat_2(Q_n)| from |flat_2(Q_{k+1})| = 2 |flat_2(Q_k)| + 2k - 1, |flat_2(Q_1)| = 0.
BigCount flat2_recurrence(unsigned n);

/// |flat_2(Q_{n+1})| = 3(2^n - 1) - 2n, for n >= 1.
BigCount flat2_closed(unsigned n);

/// Largest run count in flat(Q_n): ceil(2n/3).
unsigned max_runs(unsigned n);

/// A flattened word of order n with max_runs(n) runs. Built as the phi image
/// of a partition whose blocks have one negative and two positives wherever
/// the order allows.
StirlingWord max_runs_witness(unsigned n);

/// Conjectured closed form for |flat_3(Q_n)|. Inner sums whose upper limit
/// is below their lower limit contribute 0.
BigCount flat3_conjecture(unsigned n);

/// |Q_n^m| = prod_{i<n} (i m + 1).
BigCount mstirling_count(unsigned n, unsigned m);

/// |flat(Q_n^m)| for m >= 2 via the conjectured recurrence
///   a(j) = (m-1) a(j-1) + sum_{k=1..j} C(j-1,k-1) m^(k-1) a(j-k),  a(0) = 1,
/// where a(j) counts words of order j + 1. Order 0 also gives 1.
BigCount flatm_recurrence(unsigned n, unsigned m);

struct SeriesOptions {
    unsigned initial_terms = 16;  ///< series terms in the first round
    unsigned max_rounds = 10;     ///< term count doubles each round
};

/// |flat(Q_n^m)| from e^(-1/m) sum_k (mk + m - 1)^(n-1) / (k! m^k), evaluated
/// with rational bounds on both the truncated tail and e^(-1/m). Returns the
/// nearest integer once the enclosing interval sits within 1/4 of it; throws
/// PrecisionInsufficient when max_rounds is exhausted. Order 0 gives 1.
BigCount flatm_series(unsigned n, unsigned m, const SeriesOptions& options = {});

}  // namespace flatstir
