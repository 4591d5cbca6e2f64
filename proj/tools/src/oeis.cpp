#include "oeis.hpp"

#include "flatstir/bijection.hpp"
#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace flatstir::cli {

namespace {

// Cap for enumerating a term outright; beyond it the formula is used.
constexpr std::uint64_t kEnumerateUpTo = 5'000'000;

constexpr std::array<GeneratorInfo, 4> kGenerators{{
    {OeisGenerator::dowling, "dowling", "A007405", "D_i, type B partitions of [-i, i]", 0},
    {OeisGenerator::flat2, "flat2", "A050488", "|flat_2(Q_(i+1))|", 0},
    {OeisGenerator::mstirling3, "mstirling3", "A355164", "|flat(Q_(i+1)^3)|", 0},
    {OeisGenerator::mstirling4, "mstirling4", "A355167", "|flat(Q_(i+1)^4)|", 0},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

bool small_enough(const BigCount& objects, const EnumerationBudget& budget) {
    return objects <= BigCount(std::min(kEnumerateUpTo, budget.max_objects));
}

GeneratedTerm mstirling_flat_term(unsigned order, unsigned m, const EnumerationBudget& budget) {
    if (small_enough(stirling_word_count(order, m), budget)) {
        return {tally_flattened_runs(order, m, 1, budget).flattened, true};
    }
    return {flatm_recurrence(order, m), false};
}

}  // namespace

OeisSequence parse_bfile(std::string_view text, std::string id) {
    OeisSequence seq{std::move(id), {}};
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;

        const auto gap = line.find_first_of(" \t");
        if (gap == std::string_view::npos) {
            throw ParseError(line_no, "index value", "line " + std::to_string(line_no) + ": expected 'index value'");
        }
        const std::string_view index_text = line.substr(0, gap);
        std::string_view value_text = trim(line.substr(gap));
        std::int64_t index = 0;
        const auto [ptr, ec] = std::from_chars(index_text.data(), index_text.data() + index_text.size(), index);
        if (ec != std::errc{} || ptr != index_text.data() + index_text.size()) {
            throw ParseError(line_no, "integer index",
                             "line " + std::to_string(line_no) + ": bad index '" + std::string(index_text) + "'");
        }
        bool negative = false;
        if (!value_text.empty() && value_text.front() == '-') {
            negative = true;
            value_text.remove_prefix(1);
        }
        BigCount value;
        try {
            value = parse_decimal(value_text);
        } catch (const ParseError&) {
            throw ParseError(line_no, "integer value",
                             "line " + std::to_string(line_no) + ": bad value '" + std::string(value_text) + "'");
        }
        if (negative) value = -value;
        if (!seq.terms.empty() && index <= seq.terms.back().first) {
            throw ParseError(line_no, "increasing index",
                             "line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                                 " does not increase");
        }
        seq.terms.emplace_back(index, std::move(value));
    }
    return seq;
}

OeisSequence load_bfile(const std::filesystem::path& path, std::string id) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (id.empty()) id = path.stem().string();
    return parse_bfile(buffer.str(), std::move(id));
}

std::optional<OeisGenerator> parse_generator(std::string_view text) noexcept {
    for (const auto& g : kGenerators) {
        if (g.name == text) return g.generator;
    }
    return std::nullopt;
}

std::string_view to_string(OeisGenerator generator) noexcept { return generator_info(generator).name; }

const GeneratorInfo& generator_info(OeisGenerator generator) noexcept {
    for (const auto& g : kGenerators) {
        if (g.generator == generator) return g;
    }
    return kGenerators.front();
}

GeneratedTerm generator_term(OeisGenerator generator, std::int64_t index, const EnumerationBudget& budget) {
    const auto& info = generator_info(generator);
    if (index < info.first_index) {
        throw DomainError(std::string(info.name) + " is undefined at index " + std::to_string(index));
    }
    const auto i = static_cast<unsigned>(index - info.first_index);
    switch (generator) {
        case OeisGenerator::dowling:
            if (small_enough(dowling(i), budget)) {
                std::uint64_t count = 0;
                for_each_typeb(i, [&](const TypeBPartition&) { ++count; }, budget);
                return {count, true};
            }
            return {dowling(i), false};
        case OeisGenerator::flat2:
            if (small_enough(stirling_word_count(i + 1, 2), budget)) {
                return {tally_flattened_runs(i + 1, 2, 1, budget).flattened_with_runs(2), true};
            }
            return {flat2_recurrence(i + 1), false};
        case OeisGenerator::mstirling3:
            return mstirling_flat_term(i + 1, 3, budget);
        case OeisGenerator::mstirling4:
            return mstirling_flat_term(i + 1, 4, budget);
    }
    throw DomainError("unknown generator");
}

VerificationReport compare_with_bfile(const OeisSequence& sequence, OeisGenerator generator,
                                      const EnumerationBudget& budget) {
    const auto& info = generator_info(generator);
    VerificationReport report;
    report.suite = "oeis " + (sequence.id.empty() ? std::string(info.sequence) : sequence.id) + " vs " +
                   std::string(info.name);
    const auto start = std::chrono::steady_clock::now();
    bool reported_first = false;
    for (const auto& [index, value] : sequence.terms) {
        if (index < info.first_index) continue;
        const GeneratedTerm term = generator_term(generator, index, budget);
        const BigCount& mine = term.value;
        std::string label = "a(" + std::to_string(index) + ")" + (term.enumerated ? " enumerated" : " formula");
        if (mine != value && !reported_first) {
            label += " [first differing index]";
            reported_first = true;
        }
        report.check(std::move(label), to_decimal(value), to_decimal(mine));
    }
    if (report.cases.empty()) report.check("overlapping terms", false, "no b-file index in range");
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

}  // namespace flatstir::cli
