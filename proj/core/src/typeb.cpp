#include "flatstir/typeb.hpp"

#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace flatstir {

std::string_view rule_name(CanonicalRule rule) noexcept {
    switch (rule) {
        case CanonicalRule::zero_block_missing_zero: return "zero-block-missing-zero";
        case CanonicalRule::zero_block_has_negative: return "zero-block-has-negative";
        case CanonicalRule::zero_block_not_increasing: return "zero-block-not-increasing";
        case CanonicalRule::zero_outside_zero_block: return "zero-outside-zero-block";
        case CanonicalRule::empty_positives: return "empty-positives";
        case CanonicalRule::negatives_not_decreasing: return "negatives-not-decreasing";
        case CanonicalRule::positives_not_increasing: return "positives-not-increasing";
        case CanonicalRule::negative_after_positive: return "negative-after-positive";
        case CanonicalRule::min_magnitude_rule: return "min-magnitude-rule";
        case CanonicalRule::blocks_not_ordered: return "blocks-not-ordered";
        case CanonicalRule::magnitude_repeated: return "magnitude-repeated";
        case CanonicalRule::magnitude_missing: return "magnitude-missing";
        case CanonicalRule::magnitude_out_of_range: return "magnitude-out-of-range";
    }
    return "unknown";
}

bool CanonicalReport::has(CanonicalRule rule) const noexcept {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [rule](const CanonicalDiagnostic& d) { return d.rule == rule; });
}

std::string CanonicalReport::summary() const {
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty()) out += "; ";
        out += std::string(rule_name(d.rule)) + ": " + d.message;
    }
    return out.empty() ? "ok" : out;
}

namespace {

bool strictly_increasing(const std::vector<unsigned>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

void add(CanonicalReport& report, CanonicalRule rule, std::string message) {
    report.diagnostics.push_back({rule, std::move(message)});
}

std::string block_label(std::size_t i) { return "block " + std::to_string(i); }

}  // namespace

CanonicalReport validate_canonical(const TypeBPartition& candidate) {
    CanonicalReport report;
    const auto& zero = candidate.zero_block;
    if (zero.empty() || zero.front() != 0) {
        add(report, CanonicalRule::zero_block_missing_zero, "zero-block must start with 0");
    }
    if (!strictly_increasing(zero)) {
        add(report, CanonicalRule::zero_block_not_increasing, "zero-block must be strictly increasing");
    }

    for (std::size_t i = 0; i < candidate.blocks.size(); ++i) {
        const SignedBlock& b = candidate.blocks[i];
        const std::string label = block_label(i + 1);
        if (b.positives.empty()) {
            add(report, CanonicalRule::empty_positives, label + " has no positive element");
        }
        if (!strictly_increasing(b.positives)) {
            add(report, CanonicalRule::positives_not_increasing, label + ": positives must increase");
        }
        if (!strictly_increasing(b.negatives)) {
            add(report, CanonicalRule::negatives_not_decreasing, label + ": negatives must decrease");
        }
        const bool has_zero = std::count(b.negatives.begin(), b.negatives.end(), 0u) +
                                  std::count(b.positives.begin(), b.positives.end(), 0u) >
                              0;
        if (has_zero) {
            add(report, CanonicalRule::zero_outside_zero_block, label + " contains 0");
        }
        if (!b.negatives.empty() && !b.positives.empty()) {
            const unsigned min_neg = *std::min_element(b.negatives.begin(), b.negatives.end());
            const unsigned min_pos = *std::min_element(b.positives.begin(), b.positives.end());
            if (min_neg <= min_pos) {
                add(report, CanonicalRule::min_magnitude_rule,
                    label + ": smallest negative magnitude " + std::to_string(min_neg) +
                        " must exceed smallest positive " + std::to_string(min_pos));
            }
        }
    }

    unsigned previous_min = 0;
    bool have_previous = false;
    for (std::size_t i = 0; i < candidate.blocks.size(); ++i) {
        const auto& pos = candidate.blocks[i].positives;
        if (pos.empty()) continue;
        const unsigned min_pos = *std::min_element(pos.begin(), pos.end());
        if (have_previous && min_pos <= previous_min) {
            add(report, CanonicalRule::blocks_not_ordered,
                block_label(i + 1) + " has minimal positive " + std::to_string(min_pos) +
                    ", not above the previous block's " + std::to_string(previous_min));
        }
        previous_min = min_pos;
        have_previous = true;
    }

    const unsigned n = candidate.n;
    std::vector<unsigned> uses(static_cast<std::size_t>(n) + 1, 0);
    auto tally = [&](unsigned magnitude) {
        if (magnitude > n) {
            add(report, CanonicalRule::magnitude_out_of_range,
                std::to_string(magnitude) + " is outside [0, " + std::to_string(n) + "]");
        } else {
            ++uses[magnitude];
        }
    };
    for (unsigned v : zero) tally(v);
    for (const auto& b : candidate.blocks) {
        for (unsigned v : b.negatives) tally(v);
        for (unsigned v : b.positives) tally(v);
    }
    for (unsigned v = 0; v <= n; ++v) {
        if (uses[v] > 1) {
            add(report, CanonicalRule::magnitude_repeated, std::to_string(v) + " appears more than once");
        } else if (uses[v] == 0) {
            add(report, CanonicalRule::magnitude_missing, std::to_string(v) + " does not appear");
        }
    }
    return report;
}

std::vector<int> signed_elements(const SignedBlock& block) {
    std::vector<int> out;
    out.reserve(block.negatives.size() + block.positives.size());
    for (unsigned v : block.negatives) out.push_back(-static_cast<int>(v));
    for (unsigned v : block.positives) out.push_back(static_cast<int>(v));
    return out;
}

FullPartition expand(const TypeBPartition& partition) {
    if (auto report = validate_canonical(partition); !report.valid()) throw CanonicalError(report);
    FullPartition out;
    std::vector<int> zero;
    for (unsigned v : partition.zero_block) {
        zero.push_back(static_cast<int>(v));
        if (v != 0) zero.push_back(-static_cast<int>(v));
    }
    std::sort(zero.begin(), zero.end());
    out.push_back(std::move(zero));
    for (const auto& b : partition.blocks) {
        std::vector<int> block = signed_elements(b);
        std::sort(block.begin(), block.end());
        std::vector<int> mate;
        for (auto it = block.rbegin(); it != block.rend(); ++it) mate.push_back(-*it);
        out.push_back(std::move(block));
        out.push_back(std::move(mate));
    }
    return out;
}

TypeBPartition canonicalize(const FullPartition& blocks) {
    int n = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw NotTypeBPartition(1, "empty block");
        for (int v : b) n = std::max(n, std::abs(v));
    }
    std::vector<int> owner(2 * static_cast<std::size_t>(n) + 1, -1);
    std::vector<std::vector<int>> sorted;
    sorted.reserve(blocks.size());
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<int> b = blocks[i];
        std::sort(b.begin(), b.end());
        for (int v : b) {
            int& slot = owner[static_cast<std::size_t>(v + n)];
            if (slot != -1) {
                throw NotTypeBPartition(2, std::to_string(v) + " appears in more than one place");
            }
            slot = static_cast<int>(i);
        }
        sorted.push_back(std::move(b));
    }
    for (int v = -n; v <= n; ++v) {
        if (owner[static_cast<std::size_t>(v + n)] == -1) {
            throw NotTypeBPartition(3, std::to_string(v) + " is not covered");
        }
    }

    std::set<std::vector<int>> family(sorted.begin(), sorted.end());
    auto negate = [](const std::vector<int>& b) {
        std::vector<int> out;
        for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(-*it);
        return out;
    };
    int self_negative = -1;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const auto mate = negate(sorted[i]);
        if (!family.count(mate)) {
            throw NotTypeBPartition(4, "the negation of block " + std::to_string(i) + " is not a block");
        }
        if (mate == sorted[i]) {
            if (self_negative != -1) throw NotTypeBPartition(5, "two self-negative blocks");
            self_negative = static_cast<int>(i);
        }
    }
    if (self_negative == -1) throw NotTypeBPartition(5, "no self-negative block");

    TypeBPartition out;
    out.n = static_cast<unsigned>(n);
    out.zero_block.clear();
    for (int v : sorted[static_cast<std::size_t>(self_negative)]) {
        if (v >= 0) out.zero_block.push_back(static_cast<unsigned>(v));
    }
    // Keep the mate whose minimal positive element is smaller.
    std::map<unsigned, SignedBlock> kept;
    for (const auto& b : sorted) {
        if (b == sorted[static_cast<std::size_t>(self_negative)]) continue;
        const auto first_positive = std::upper_bound(b.begin(), b.end(), 0);
        if (first_positive == b.end()) continue;
        const auto mate = negate(b);
        const auto mate_positive = std::upper_bound(mate.begin(), mate.end(), 0);
        if (mate_positive != mate.end() && *mate_positive < *first_positive) continue;
        SignedBlock block;
        for (auto it = first_positive; it-- != b.begin();) block.negatives.push_back(static_cast<unsigned>(-*it));
        for (auto it = first_positive; it != b.end(); ++it) block.positives.push_back(static_cast<unsigned>(*it));
        kept.emplace(block.positives.front(), std::move(block));
    }
    for (auto& [key, block] : kept) out.blocks.push_back(std::move(block));
    return out;
}

TypeBPartition from_signed_blocks(const FullPartition& blocks) {
    CanonicalReport report;
    TypeBPartition out;
    out.zero_block.clear();
    unsigned n = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        SignedBlock block;
        bool seen_positive = false;
        for (int v : blocks[i]) {
            const unsigned magnitude = static_cast<unsigned>(std::abs(v));
            n = std::max(n, magnitude);
            if (i == 0) {
                if (v < 0) {
                    add(report, CanonicalRule::zero_block_has_negative,
                        "zero-block contains " + std::to_string(v));
                } else {
                    out.zero_block.push_back(magnitude);
                }
                continue;
            }
            if (v == 0) {
                add(report, CanonicalRule::zero_outside_zero_block, block_label(i) + " contains 0");
            } else if (v < 0) {
                if (seen_positive) {
                    add(report, CanonicalRule::negative_after_positive,
                        block_label(i) + ": " + std::to_string(v) + " follows a positive element");
                }
                block.negatives.push_back(magnitude);
            } else {
                seen_positive = true;
                block.positives.push_back(magnitude);
            }
        }
        if (i > 0) out.blocks.push_back(std::move(block));
    }
    out.n = n;
    if (blocks.empty()) out.zero_block.clear();
    auto structural = validate_canonical(out);
    for (auto& d : structural.diagnostics) report.diagnostics.push_back(std::move(d));
    if (!report.valid()) throw CanonicalError(std::move(report));
    return out;
}

// ---------------------------------------------------------------------------

FullPartition parse_adler_blocks(std::string_view text) {
    constexpr int kMaxMagnitude = 1'000'000;
    FullPartition blocks;
    std::size_t pos = 0;
    auto skip_spaces = [&]() {
        std::size_t count = 0;
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
            ++pos;
            ++count;
        }
        return count;
    };
    auto fail = [&](const std::string& expected) -> ParseError {
        const std::string found = pos < text.size() ? "'" + std::string(1, text[pos]) + "'" : "end of input";
        return ParseError(pos, expected,
                          "offset " + std::to_string(pos) + ": expected " + expected + ", found " + found);
    };
    auto parse_element = [&]() -> int {
        bool negative = false;
        if (pos < text.size() && text[pos] == '-') {
            negative = true;
            ++pos;
        }
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw fail("element");
        if (text[pos] == '0') {
            if (negative) throw fail("nonzero digit");
            ++pos;
            return 0;
        }
        long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxMagnitude) throw fail("element of magnitude <= 1000000");
            ++pos;
        }
        return negative ? -static_cast<int>(value) : static_cast<int>(value);
    };

    skip_spaces();
    blocks.emplace_back();
    blocks.back().push_back(parse_element());
    while (true) {
        const std::size_t spaces = skip_spaces();
        if (pos == text.size()) break;
        if (text[pos] == '|') {
            ++pos;
            skip_spaces();
            blocks.emplace_back();
            blocks.back().push_back(parse_element());
        } else if (spaces > 0) {
            blocks.back().push_back(parse_element());
        } else {
            throw fail("' ' or '|'");
        }
    }
    return blocks;
}

TypeBPartition parse_adler(std::string_view text) {
    return from_signed_blocks(parse_adler_blocks(text));
}

std::string format_adler(const TypeBPartition& partition) {
    std::string out;
    for (std::size_t i = 0; i < partition.zero_block.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(partition.zero_block[i]);
    }
    for (const auto& b : partition.blocks) {
        out += " |";
        for (unsigned v : b.negatives) out += " -" + std::to_string(v);
        for (unsigned v : b.positives) out += " " + std::to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace detail {

void validate_typeb_args(unsigned n, const EnumerationBudget& budget) {
    if (n > kMaxTypeBOrder) throw DomainError("type B order exceeds " + std::to_string(kMaxTypeBOrder));
    require_within_budget(dowling(n), budget, "type B partitions of [-" + std::to_string(n) + ", " +
                                                  std::to_string(n) + "]");
}

namespace {

class TypeBWalker {
public:
    TypeBWalker(unsigned n, unsigned shard, unsigned shard_count, TypeBCallback callback, void* context)
        : n_(n), shard_(shard), shard_count_(shard_count), callback_(callback), context_(context) {
        partition_.n = n;
    }

    void run() {
        support_.clear();
        visit_supports(1);
    }

private:
    void visit_supports(unsigned next) {
        if (ordinal_++ % shard_count_ == shard_) emit_for_support();
        for (unsigned e = next; e <= n_; ++e) {
            support_.push_back(e);
            visit_supports(e + 1);
            support_.pop_back();
        }
    }

    void emit_for_support() {
        partition_.zero_block.assign(1, 0);
        partition_.zero_block.insert(partition_.zero_block.end(), support_.begin(), support_.end());

        rest_.clear();
        for (unsigned v = 1, s = 0; v <= n_; ++v) {
            if (s < support_.size() && support_[s] == v) {
                ++s;
            } else {
                rest_.push_back(v);
            }
        }
        const std::size_t t = rest_.size();
        rgs_.assign(t, 0);
        while (true) {
            emit_signs();
            // Next restricted growth string in lexicographic order.
            std::size_t i = t;
            bool advanced = false;
            while (i-- > 1) {
                unsigned prefix_max = 0;
                for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs_[j]);
                if (rgs_[i] <= prefix_max) {
                    ++rgs_[i];
                    std::fill(rgs_.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs_.end(), 0u);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }

    void emit_signs() {
        const std::size_t t = rest_.size();
        unsigned block_count = 0;
        first_.assign(t, false);
        for (std::size_t i = 0; i < t; ++i) {
            if (rgs_[i] == block_count) {
                first_[i] = true;
                ++block_count;
            }
        }
        const std::size_t free = t - block_count;
        const std::uint64_t masks = std::uint64_t{1} << free;
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
            partition_.blocks.resize(block_count);
            for (auto& b : partition_.blocks) {
                b.negatives.clear();
                b.positives.clear();
            }
            std::size_t bit = 0;
            for (std::size_t i = 0; i < t; ++i) {
                SignedBlock& b = partition_.blocks[rgs_[i]];
                if (first_[i] || !((mask >> bit++) & 1u)) {
                    b.positives.push_back(rest_[i]);
                } else {
                    b.negatives.push_back(rest_[i]);
                }
            }
            callback_(partition_, context_);
        }
    }

    unsigned n_;
    unsigned shard_;
    unsigned shard_count_;
    TypeBCallback callback_;
    void* context_;
    std::uint64_t ordinal_ = 0;
    std::vector<unsigned> support_;
    std::vector<unsigned> rest_;
    std::vector<unsigned> rgs_;
    std::vector<bool> first_;
    TypeBPartition partition_;
};

}  // namespace

void for_each_typeb_impl(unsigned n, unsigned shard, unsigned shard_count, TypeBCallback callback,
                         void* context) {
    if (shard_count == 0 || shard >= shard_count) throw std::invalid_argument("bad shard selection");
    TypeBWalker(n, shard, shard_count, callback, context).run();
}

}  // namespace detail

std::vector<TypeBPartition> generate_typeb(unsigned n, const EnumerationBudget& budget) {
    std::vector<TypeBPartition> out;
    for_each_typeb(n, [&](const TypeBPartition& p) { out.push_back(p); }, budget);
    return out;
}

}  // namespace flatstir
