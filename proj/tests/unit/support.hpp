#pragma once

#include "flatstir/bijection.hpp"
#include "flatstir/stirling.hpp"
#include "flatstir/typeb.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <vector>

namespace flatstir::testing {

inline std::filesystem::path fixture_dir() { return FLATSTIR_FIXTURE_DIR; }

/// Uniform-ish random type B partition of [-n, n]: each magnitude joins the
/// zero-block, an existing block or a new one, with a random sign.
inline TypeBPartition random_partition(unsigned n, std::mt19937_64& rng) {
    std::vector<std::vector<int>> blocks;  // signed members, block 0 = zero-block
    blocks.push_back({0});
    for (unsigned v = 1; v <= n; ++v) {
        std::uniform_int_distribution<std::size_t> pick(0, blocks.size());
        const std::size_t b = pick(rng);
        if (b == 0) {
            blocks[0].push_back(static_cast<int>(v));
        } else if (b == blocks.size()) {
            blocks.push_back({static_cast<int>(v)});
        } else {
            blocks[b].push_back(rng() % 2 ? -static_cast<int>(v) : static_cast<int>(v));
        }
    }
    std::vector<std::vector<int>> full;
    std::vector<int> zero;
    for (int v : blocks[0]) {
        zero.push_back(v);
        if (v != 0) zero.push_back(-v);
    }
    full.push_back(zero);
    for (std::size_t b = 1; b < blocks.size(); ++b) {
        full.push_back(blocks[b]);
        std::vector<int> mate;
        for (int v : blocks[b]) mate.push_back(-v);
        full.push_back(mate);
    }
    std::shuffle(full.begin(), full.end(), rng);
    for (auto& block : full) std::shuffle(block.begin(), block.end(), rng);
    return canonicalize(full);
}

/// Random m-Stirling word of order n by random insertion of each block.
inline std::vector<Letter> random_stirling(unsigned n, unsigned m, std::mt19937_64& rng) {
    std::vector<Letter> w;
    for (unsigned v = 1; v <= n; ++v) {
        std::uniform_int_distribution<std::size_t> gap(0, w.size());
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(gap(rng)), m, static_cast<Letter>(v));
    }
    return w;
}

inline std::vector<Letter> letters(std::initializer_list<int> values) {
    std::vector<Letter> out;
    for (int v : values) out.push_back(static_cast<Letter>(v));
    return out;
}

}  // namespace flatstir::testing
