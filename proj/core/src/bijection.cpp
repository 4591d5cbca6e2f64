#include "flatstir/bijection.hpp"

#include "flatstir/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace flatstir {

namespace {

std::vector<unsigned> sorted_unique(std::span<const unsigned> set) {
    std::vector<unsigned> s(set.begin(), set.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

Letter to_letter(unsigned v) {
    if (v == 0 || v > kMaxOrder) throw DomainError("letter " + std::to_string(v) + " out of range");
    return static_cast<Letter>(v);
}

// Hot-path versions over already sorted magnitudes, shifted by one.
void append_f_shifted(const std::vector<unsigned>& magnitudes, std::vector<Letter>& out) {
    for (unsigned v : magnitudes) {
        const Letter l = static_cast<Letter>(v + 1);
        out.push_back(l);
        out.push_back(l);
    }
}

void append_g_shifted(const std::vector<unsigned>& magnitudes, std::vector<Letter>& out) {
    if (magnitudes.empty()) return;
    const Letter head = static_cast<Letter>(magnitudes.front() + 1);
    out.push_back(head);
    for (std::size_t i = 1; i < magnitudes.size(); ++i) {
        const Letter l = static_cast<Letter>(magnitudes[i] + 1);
        out.push_back(l);
        out.push_back(l);
    }
    out.push_back(head);
}

}  // namespace

std::vector<unsigned> map_h(std::span<const int> set) {
    std::vector<unsigned> out;
    out.reserve(set.size());
    for (int v : set) out.push_back(static_cast<unsigned>(std::abs(v)) + 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Letter> map_f(std::span<const unsigned> set) {
    std::vector<Letter> out;
    for (unsigned v : sorted_unique(set)) {
        out.push_back(to_letter(v));
        out.push_back(to_letter(v));
    }
    return out;
}

std::vector<Letter> map_g(std::span<const unsigned> set) {
    const auto s = sorted_unique(set);
    std::vector<Letter> out;
    if (s.empty()) return out;
    out.push_back(to_letter(s.front()));
    for (std::size_t i = 1; i < s.size(); ++i) {
        out.push_back(to_letter(s[i]));
        out.push_back(to_letter(s[i]));
    }
    out.push_back(to_letter(s.front()));
    return out;
}

void append_phi(const TypeBPartition& partition, std::vector<Letter>& out) {
    append_g_shifted(partition.zero_block, out);
    for (const auto& block : partition.blocks) {
        append_f_shifted(block.negatives, out);
        append_g_shifted(block.positives, out);
    }
}

StirlingWord phi(const TypeBPartition& partition, CheckOutput check) {
    if (auto report = validate_canonical(partition); !report.valid()) throw CanonicalError(report);
    if (partition.n >= kMaxOrder) throw DomainError("partition order too large for letters");
    std::vector<Letter> letters;
    letters.reserve(2 * (static_cast<std::size_t>(partition.n) + 1));
    append_phi(partition, letters);
    if (check == CheckOutput::yes) {
        if (auto why = stirling_violation(letters, 2)) {
            throw std::logic_error("phi produced a non-Stirling word: " + *why);
        }
        if (!is_flattened(letters)) throw std::logic_error("phi produced a non-flattened word");
    }
    return StirlingWord::assume_valid(std::move(letters), 2);
}

TypeBPartition psi(std::span<const Letter> word) {
    if (word.empty()) throw DomainError("psi needs a word of order at least 1");
    if (auto why = stirling_violation(word, 2)) throw DomainError("not a Stirling word: " + *why);
    {
        Letter lead = word[0];
        for (std::size_t i = 1; i < word.size(); ++i) {
            if (word[i] < word[i - 1]) {
                if (word[i] < lead) {
                    throw DomainError("not flattened: run starting at index " + std::to_string(i) +
                                      " leads with " + std::to_string(word[i]) + " after a run led by " +
                                      std::to_string(lead));
                }
                lead = word[i];
            }
        }
    }

    const std::size_t order = word.size() / 2;
    std::vector<std::size_t> first(order + 1, word.size());
    for (std::size_t i = word.size(); i-- > 0;) first[word[i]] = i;

    // Half-open ranges, collected right to left: (n_begin, p_begin, p_end).
    struct Segment {
        std::size_t n_begin, p_begin, p_end;
    };
    std::vector<Segment> segments;
    std::size_t end = word.size();
    while (true) {
        const std::size_t j = first[word[end - 1]];
        if (j >= end) throw std::logic_error("psi: segment start outside the unread prefix");
        if (j == 0) {
            segments.push_back({0, 0, end});
            break;
        }
        std::size_t n_begin = j;
        while (n_begin > 0 && word[n_begin - 1] > word[j]) --n_begin;
        if (n_begin == 0) throw std::logic_error("psi: N-segment reaches the start of the word");
        segments.push_back({n_begin, j, end});
        end = n_begin;
    }
    std::reverse(segments.begin(), segments.end());

    // A P-segment reads s1 s2 s2 ... sk sk s1; keeping first occurrences gives s1..sk.
    auto read_positive = [&](std::size_t begin, std::size_t stop) {
        std::vector<unsigned> values;
        const std::size_t len = stop - begin;
        const bool shaped = len >= 2 && len % 2 == 0 && word[begin] == word[stop - 1];
        if (!shaped) throw std::logic_error("psi: malformed P-segment at index " + std::to_string(begin));
        values.push_back(static_cast<unsigned>(word[begin]) - 1);
        for (std::size_t i = begin + 1; i + 1 < stop; i += 2) {
            if (word[i] != word[i + 1] || word[i] <= word[begin]) {
                throw std::logic_error("psi: malformed P-segment at index " + std::to_string(i));
            }
            values.push_back(static_cast<unsigned>(word[i]) - 1);
        }
        return values;
    };
    auto read_negative = [&](std::size_t begin, std::size_t stop) {
        std::vector<unsigned> values;
        if ((stop - begin) % 2 != 0) throw std::logic_error("psi: odd N-segment at index " + std::to_string(begin));
        for (std::size_t i = begin; i < stop; i += 2) {
            if (word[i] != word[i + 1]) {
                throw std::logic_error("psi: N-letter at index " + std::to_string(i) + " is not a doubled pair");
            }
            values.push_back(static_cast<unsigned>(word[i]) - 1);
        }
        return values;
    };

    TypeBPartition out;
    out.n = static_cast<unsigned>(order - 1);
    out.zero_block = read_positive(segments.front().p_begin, segments.front().p_end);
    for (std::size_t s = 1; s < segments.size(); ++s) {
        SignedBlock block;
        block.negatives = read_negative(segments[s].n_begin, segments[s].p_begin);
        block.positives = read_positive(segments[s].p_begin, segments[s].p_end);
        out.blocks.push_back(std::move(block));
    }
    if (auto report = validate_canonical(out); !report.valid()) {
        throw std::logic_error("psi produced a non-canonical partition: " + report.summary());
    }
    return out;
}

TypeBPartition psi(const StirlingWord& word) {
    if (word.multiplicity() != 2) {
        throw DomainError("psi is defined for multiplicity 2 only, got " + std::to_string(word.multiplicity()));
    }
    return psi(word.view());
}

std::size_t run_count_from_partition(const TypeBPartition& partition) noexcept {
    std::size_t runs = 1;
    if (partition.zero_block.size() >= 2) ++runs;
    for (const auto& b : partition.blocks) {
        if (!b.negatives.empty()) ++runs;
        if (b.positives.size() >= 2) ++runs;
    }
    return runs;
}

std::vector<StirlingWord> generate_flattened_via_bijection(unsigned n, const EnumerationBudget& budget) {
    std::vector<StirlingWord> out;
    for_each_flattened_via_bijection(
        n, [&](std::span<const Letter> w) { out.push_back(StirlingWord::assume_valid({w.begin(), w.end()}, 2)); },
        budget);
    return out;
}

RunHistogram tally_flattened_runs_via_bijection(unsigned n, unsigned threads, const EnumerationBudget& budget) {
    if (n == 0) throw DomainError("bijective generation needs order >= 1");
    detail::validate_typeb_args(n - 1, budget);
    if (threads == 0) threads = default_thread_count();
    // Zero-block supports number 2^(n-1); more shards than supports would idle.
    const unsigned shards = std::max(1u, std::min<unsigned>(threads * 8, 1u << std::min(n - 1, 20u)));

    const std::size_t slots = 2 * static_cast<std::size_t>(n) + 1;
    std::vector<RunHistogram> partial(threads);
    std::atomic<unsigned> cursor{0};
    auto work = [&](unsigned id) {
        RunHistogram& local = partial[id];
        local.flattened_by_runs.assign(slots, 0);
        std::vector<Letter> buffer;
        buffer.reserve(2 * static_cast<std::size_t>(n));
        for (unsigned shard = cursor.fetch_add(1); shard < shards; shard = cursor.fetch_add(1)) {
            for_each_typeb_shard(n - 1, shard, shards, [&](const TypeBPartition& p) {
                buffer.clear();
                append_phi(p, buffer);
                ++local.words;
                ++local.flattened;
                ++local.flattened_by_runs[run_count(buffer)];
            });
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    RunHistogram total;
    for (const auto& p : partial) total += p;
    while (total.flattened_by_runs.size() > 1 && total.flattened_by_runs.back() == 0) {
        total.flattened_by_runs.pop_back();
    }
    return total;
}

}  // namespace flatstir
