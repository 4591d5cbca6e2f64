#pragma once

// OEIS b-files: one "index value" pair per line; blank lines and lines
// starting with '#' are skipped.

#include "report.hpp"

#include "flatstir/bigcount.hpp"
#include "flatstir/budget.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace flatstir::cli {

struct OeisSequence {
    std::string id;
    std::vector<std::pair<std::int64_t, BigCount>> terms;  ///< strictly increasing indices
};

/// Throws ParseError whose position is the 1-based line number.
OeisSequence parse_bfile(std::string_view text, std::string id = {});
OeisSequence load_bfile(const std::filesystem::path& path, std::string id = {});

enum class OeisGenerator { dowling, flat2, mstirling3, mstirling4 };

std::optional<OeisGenerator> parse_generator(std::string_view text) noexcept;
std::string_view to_string(OeisGenerator generator) noexcept;

struct GeneratorInfo {
    OeisGenerator generator;
    std::string_view name;
    std::string_view sequence;   ///< the OEIS entry this generator reproduces
    std::string_view meaning;    ///< what term i counts
    std::int64_t first_index;    ///< smallest b-file index the generator defines
};

const GeneratorInfo& generator_info(OeisGenerator generator) noexcept;

struct GeneratedTerm {
    BigCount value;
    bool enumerated = false;  ///< false: exact formula or recurrence
};

/// Term `index` of the generator's sequence. Counts of at most 5e6 objects
/// (and within the budget) are enumerated; larger ones come from formulas.
GeneratedTerm generator_term(OeisGenerator generator, std::int64_t index, const EnumerationBudget& budget = {});

/// Compares every b-file term whose index the generator defines. The first
/// differing index, if any, is named in the report.
VerificationReport compare_with_bfile(const OeisSequence& sequence, OeisGenerator generator,
                                      const EnumerationBudget& budget = {});

}  // namespace flatstir::cli
