#pragma once

// Plain comma-separated tables of counts. A document is one or more
// sections separated by a blank line; each section is a header row followed
// by rows of nonnegative decimal integers with one cell per header column.
//
//   n,|Q_n|,|flat|,k=1,k=2
//   1,1,1,1,0
//   2,3,2,1,1

#include "flatstir/bigcount.hpp"
#include "flatstir/count_table.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flatstir::cli {

struct CsvSection {
    std::vector<std::string> header;
    std::vector<std::vector<BigCount>> rows;

    friend bool operator==(const CsvSection&, const CsvSection&) = default;
};

std::string format_csv(const std::vector<CsvSection>& sections);

/// Throws ParseError whose position is the 1-based line number.
std::vector<CsvSection> parse_csv(std::string_view text);

/// Rows n = 1..max_n with columns n, |Q_n|, |flat|, k=1..max_k (0 = up to
/// max_runs(max_n)). Cells beyond a row's largest run count are 0.
CsvSection flat_section(const CountTable& table, unsigned max_n, unsigned max_k = 0);

/// Rows n = 1..max_n with columns n, m=m_min..m_max.
CsvSection mstirling_section(const CountTable& table, unsigned max_n, unsigned m_min, unsigned m_max);

}  // namespace flatstir::cli
