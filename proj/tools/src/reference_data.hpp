#pragma once

// Published counts used as fixed references by the verification suites.

#include <array>
#include <cstdint>
#include <vector>

namespace flatstir::reference {

struct FlatRow {
    unsigned n;
    std::uint64_t words;                  // |Q_n|
    std::uint64_t flattened;              // |flat(Q_n)|
    std::vector<std::uint64_t> by_runs;   // |flat_k(Q_n)|, k = 1, 2, ...
};

inline const std::vector<FlatRow>& flat_table() {
    static const std::vector<FlatRow> rows{
        {1, 1, 1, {1}},
        {2, 3, 2, {1, 1}},
        {3, 15, 6, {1, 5}},
        {4, 105, 24, {1, 15, 8}},
        {5, 945, 116, {1, 37, 70, 8}},
        {6, 10395, 648, {1, 83, 374, 190}},
        {7, 135135, 4088, {1, 177, 1596, 2034, 280}},
        {8, 2027025, 28640, {1, 367, 6012, 15260, 6720, 280}},
        {9, 34459425, 219920, {1, 749, 20994, 93764, 88732, 15680}},
        {10, 654729075, 1832224, {1, 1515, 69842, 508538, 866796, 363132, 22400}},
    };
    return rows;
}

inline constexpr unsigned kMStirlingMinM = 2;
inline constexpr unsigned kMStirlingMaxM = 5;
inline constexpr unsigned kMStirlingMaxN = 7;

/// |flat(Q_n^m)|, row n = 1..7, column m = 2..5.
inline constexpr std::array<std::array<std::uint64_t, 4>, 7> kMStirlingFlat{{
    {1, 1, 1, 1},
    {2, 3, 4, 5},
    {6, 12, 20, 30},
    {24, 63, 128, 225},
    {116, 405, 1008, 2075},
    {648, 3024, 9280, 22500},
    {4088, 25515, 96704, 276875},
}};

inline std::uint64_t mstirling_flat(unsigned n, unsigned m) { return kMStirlingFlat[n - 1][m - 2]; }

}  // namespace flatstir::reference
