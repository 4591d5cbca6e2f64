#include "flatstir/stirling.hpp"

#include "flatstir/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstring>
#include <mutex>
#include <thread>

namespace flatstir {

BigCount parse_decimal(std::string_view text) {
    if (text.empty()) throw ParseError(0, "digit", "empty decimal string");
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') {
            throw ParseError(i, "digit", "invalid decimal digit '" + std::string(1, text[i]) + "'");
        }
    }
    return BigCount(std::string(text));
}

void require_within_budget(const BigCount& projected, const EnumerationBudget& budget,
                           std::string_view what) {
    if (projected > BigCount(budget.max_objects)) {
        throw BudgetExceeded(std::string(what) + ": projected " + projected.str() +
                             " objects exceeds the enumeration cap of " +
                             std::to_string(budget.max_objects));
    }
}

unsigned default_thread_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// ---------------------------------------------------------------------------

std::optional<std::string> stirling_violation(std::span<const Letter> letters, unsigned m) {
    if (m == 0) return "multiplicity must be at least 1";
    if (letters.size() % m != 0) {
        return "length " + std::to_string(letters.size()) + " is not a multiple of " +
               std::to_string(m);
    }
    const std::size_t n = letters.size() / m;
    std::vector<unsigned> seen(n + 1, 0);
    // Values whose copies are not all placed yet; strictly increasing bottom to top.
    std::vector<Letter> open;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const Letter v = letters[i];
        if (v == 0 || v > n) {
            return "letter " + std::to_string(v) + " at index " + std::to_string(i) +
                   " is outside [1, " + std::to_string(n) + "]";
        }
        if (seen[v] == m) {
            return "letter " + std::to_string(v) + " at index " + std::to_string(i) +
                   " occurs more than " + std::to_string(m) + " times";
        }
        if (seen[v] == 0) {
            if (!open.empty() && open.back() > v) {
                return "letter " + std::to_string(v) + " at index " + std::to_string(i) +
                       " lies between copies of the larger letter " + std::to_string(open.back());
            }
            if (m > 1) open.push_back(v);
        } else if (open.back() != v) {
            return "letter " + std::to_string(open.back()) + " lies between copies of " +
                   std::to_string(v) + " (index " + std::to_string(i) + ")";
        }
        if (++seen[v] == m && m > 1) open.pop_back();
    }
    return std::nullopt;
}

StirlingWord StirlingWord::from_letters(std::vector<Letter> letters, unsigned multiplicity) {
    if (auto why = stirling_violation(letters, multiplicity)) {
        throw DomainError("not a " + std::to_string(multiplicity) + "-Stirling word: " + *why);
    }
    return StirlingWord(std::move(letters), multiplicity);
}

StirlingWord StirlingWord::assume_valid(std::vector<Letter> letters, unsigned multiplicity) {
    return StirlingWord(std::move(letters), multiplicity);
}

StirlingWord StirlingWord::parse(std::string_view text, unsigned multiplicity) {
    return from_letters(parse_word(text), multiplicity);
}

std::string StirlingWord::to_string() const { return format_word(letters_); }

// ---------------------------------------------------------------------------

RunDecomposition run_decomposition(std::span<const Letter> word) {
    RunDecomposition runs;
    if (word.empty()) return runs;
    std::size_t start = 0;
    for (std::size_t i = 1; i <= word.size(); ++i) {
        if (i == word.size() || word[i] < word[i - 1]) {
            runs.segments.emplace_back(start, i);
            runs.leading_terms.push_back(word[start]);
            start = i;
        }
    }
    return runs;
}

std::size_t descent_count(std::span<const Letter> word) noexcept {
    std::size_t descents = 0;
    for (std::size_t i = 1; i < word.size(); ++i) descents += word[i] < word[i - 1];
    return descents;
}

std::size_t run_count(std::span<const Letter> word) noexcept {
    return word.empty() ? 0 : descent_count(word) + 1;
}

std::size_t flattened_run_count(std::span<const Letter> word) noexcept {
    if (word.empty()) return 0;
    Letter lead = word[0];
    std::size_t runs = 1;
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] < word[i - 1]) {
            if (word[i] < lead) return 0;
            lead = word[i];
            ++runs;
        }
    }
    return runs;
}

bool is_flattened(std::span<const Letter> word) noexcept {
    return word.empty() || flattened_run_count(word) != 0;
}

// ---------------------------------------------------------------------------

std::vector<Letter> parse_word(std::string_view text) {
    std::vector<Letter> letters;
    const bool spaced = text.find_first_of(" \t") != std::string_view::npos;
    if (!spaced) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const char c = text[i];
            if (c < '1' || c > '9') {
                throw ParseError(i, "digit 1-9",
                                 "compact word: unexpected character '" + std::string(1, c) +
                                     "' at offset " + std::to_string(i));
            }
            letters.push_back(static_cast<Letter>(c - '0'));
        }
        return letters;
    }
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t begin = i;
        while (i < text.size() && text[i] != ' ' && text[i] != '\t') ++i;
        const std::string_view token = text.substr(begin, i - begin);
        unsigned value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || token[0] == '0' ||
            token[0] == '+') {
            throw ParseError(begin, "positive decimal letter",
                             "invalid letter '" + std::string(token) + "' at offset " +
                                 std::to_string(begin));
        }
        if (value > kMaxOrder) {
            throw ParseError(begin, "letter <= 255",
                             "letter " + std::string(token) + " exceeds the supported order " +
                                 std::to_string(kMaxOrder));
        }
        letters.push_back(static_cast<Letter>(value));
    }
    return letters;
}

std::string format_word(std::span<const Letter> word) {
    std::string out;
    out.reserve(word.size() * 3);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out.push_back(' ');
        out += std::to_string(word[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

BigCount stirling_word_count(unsigned n, unsigned m) {
    BigCount count = 1;
    for (unsigned i = 0; i < n; ++i) count *= BigCount(i) * m + 1;
    return count;
}

namespace detail {

InsertionWalker::InsertionWalker(unsigned n, unsigned m)
    : n_(n), m_(m), buffer_(static_cast<std::size_t>(n) * m + 1) {}

void InsertionWalker::seed(std::span<const std::size_t> gaps) {
    for (std::size_t gap : gaps) {
        insert_block(gap, length_, static_cast<Letter>(next_value_));
        length_ += m_;
        ++next_value_;
    }
}

void InsertionWalker::insert_block(std::size_t gap, std::size_t length, Letter letter) noexcept {
    Letter* base = buffer_.data();
    std::memmove(base + gap + m_, base + gap, length - gap);
    std::memset(base + gap, letter, m_);
}

void InsertionWalker::remove_block(std::size_t gap, std::size_t length) noexcept {
    Letter* base = buffer_.data();
    std::memmove(base + gap, base + gap + m_, length - gap);
}

void validate_generation_args(unsigned n, unsigned m, const EnumerationBudget& budget) {
    if (m == 0) throw DomainError("multiplicity must be at least 1");
    if (n > kMaxOrder) throw DomainError("order exceeds " + std::to_string(kMaxOrder));
    require_within_budget(stirling_word_count(n, m), budget,
                          "Q_" + std::to_string(n) + "^" + std::to_string(m));
}

}  // namespace detail

std::vector<StirlingWord> generate_stirling(unsigned n, unsigned m, const EnumerationBudget& budget) {
    std::vector<StirlingWord> out;
    for_each_stirling(
        n, m,
        [&](std::span<const Letter> w) {
            out.push_back(StirlingWord::assume_valid({w.begin(), w.end()}, m));
        },
        budget);
    return out;
}

std::vector<StirlingWord> generate_flattened_filter(unsigned n, unsigned m,
                                                    const EnumerationBudget& budget) {
    std::vector<StirlingWord> out;
    for_each_flattened(
        n, m,
        [&](std::span<const Letter> w) {
            out.push_back(StirlingWord::assume_valid({w.begin(), w.end()}, m));
        },
        budget);
    return out;
}

std::size_t RunHistogram::max_flattened_runs() const noexcept {
    for (std::size_t k = flattened_by_runs.size(); k-- > 0;) {
        if (flattened_by_runs[k] != 0) return k;
    }
    return 0;
}

RunHistogram& RunHistogram::operator+=(const RunHistogram& other) {
    words += other.words;
    flattened += other.flattened;
    if (flattened_by_runs.size() < other.flattened_by_runs.size()) {
        flattened_by_runs.resize(other.flattened_by_runs.size(), 0);
    }
    for (std::size_t k = 0; k < other.flattened_by_runs.size(); ++k) {
        flattened_by_runs[k] += other.flattened_by_runs[k];
    }
    return *this;
}

RunHistogram tally_flattened_runs(unsigned n, unsigned m, unsigned threads,
                                  const EnumerationBudget& budget) {
    detail::validate_generation_args(n, m, budget);
    if (threads == 0) threads = default_thread_count();

    // Prefixes fix the gaps of values 1..depth; pick depth so there are
    // several prefixes per worker.
    unsigned depth = 0;
    std::uint64_t prefix_count = 1;
    while (depth < n && prefix_count < 16ull * threads) {
        prefix_count *= static_cast<std::uint64_t>(depth) * m + 1;
        ++depth;
    }
    std::vector<std::vector<std::size_t>> prefixes{{}};
    for (unsigned v = 1; v <= depth; ++v) {
        std::vector<std::vector<std::size_t>> next;
        const std::size_t gaps = static_cast<std::size_t>(v - 1) * m + 1;
        for (const auto& p : prefixes) {
            for (std::size_t g = 0; g < gaps; ++g) {
                next.push_back(p);
                next.back().push_back(g);
            }
        }
        prefixes = std::move(next);
    }

    const std::size_t slots = static_cast<std::size_t>(n) * m + 2;
    std::atomic<std::size_t> cursor{0};
    std::vector<RunHistogram> partial(threads);
    auto work = [&](unsigned id) {
        RunHistogram& local = partial[id];
        local.flattened_by_runs.assign(slots, 0);
        for (std::size_t i = cursor.fetch_add(1); i < prefixes.size(); i = cursor.fetch_add(1)) {
            detail::InsertionWalker walker(n, m);
            walker.seed(prefixes[i]);
            auto visit = [&](std::span<const Letter> w) {
                ++local.words;
                if (const std::size_t runs = flattened_run_count(w); runs != 0 || w.empty()) {
                    ++local.flattened;
                    ++local.flattened_by_runs[runs];
                }
            };
            walker.walk(visit);
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
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
