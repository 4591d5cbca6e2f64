#include "csv.hpp"

#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <algorithm>

namespace flatstir::cli {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return fields;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& expected, const std::string& what) {
    throw ParseError(line_no, expected, "csv line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

std::string format_csv(const std::vector<CsvSection>& sections) {
    std::string out;
    for (std::size_t s = 0; s < sections.size(); ++s) {
        if (s > 0) out += '\n';
        const auto& section = sections[s];
        for (std::size_t i = 0; i < section.header.size(); ++i) {
            if (i > 0) out += ',';
            out += section.header[i];
        }
        out += '\n';
        for (const auto& row : section.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i > 0) out += ',';
                out += to_decimal(row[i]);
            }
            out += '\n';
        }
    }
    return out;
}

std::vector<CsvSection> parse_csv(std::string_view text) {
    std::vector<CsvSection> sections;
    CsvSection* current = nullptr;
    std::size_t line_no = 0;
    if (!text.empty() && text.back() != '\n') fail(1 + static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')),
                                                   "newline", "missing final newline");
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl + 1);
        ++line_no;
        if (line.empty()) {
            if (current == nullptr || text.empty()) fail(line_no, "header or row", "unexpected blank line");
            current = nullptr;
            continue;
        }
        const auto fields = split_fields(line);
        if (current == nullptr) {
            CsvSection section;
            for (const auto f : fields) {
                if (f.empty()) fail(line_no, "column name", "empty column name");
                section.header.emplace_back(f);
            }
            if (section.header.front() != "n") fail(line_no, "'n' column", "first column must be 'n'");
            sections.push_back(std::move(section));
            current = &sections.back();
            continue;
        }
        if (fields.size() != current->header.size()) {
            fail(line_no, std::to_string(current->header.size()) + " cells",
                 "row has " + std::to_string(fields.size()) + " cells, header has " +
                     std::to_string(current->header.size()));
        }
        std::vector<BigCount> row;
        row.reserve(fields.size());
        for (const auto f : fields) {
            // Leading zeros would not survive re-emission.
            if (f.size() > 1 && f.front() == '0') fail(line_no, "decimal integer", "leading zero in '" + std::string(f) + "'");
            try {
                row.push_back(parse_decimal(f));
            } catch (const ParseError&) {
                fail(line_no, "decimal integer", "bad cell '" + std::string(f) + "'");
            }
        }
        current->rows.push_back(std::move(row));
    }
    if (sections.empty()) fail(1, "header", "empty document");
    return sections;
}

CsvSection flat_section(const CountTable& table, unsigned max_n, unsigned max_k) {
    if (max_k == 0) max_k = max_runs(max_n);
    CsvSection section;
    section.header = {"n", "|Q_n|", "|flat|"};
    for (unsigned k = 1; k <= max_k; ++k) section.header.push_back("k=" + std::to_string(k));
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<BigCount> row{n, table.count({CountKind::stirling, n, 2, 0}).value_or(0),
                                  table.count({CountKind::flat, n, 2, 0}).value_or(0)};
        for (unsigned k = 1; k <= max_k; ++k) row.push_back(table.count({CountKind::flat_k, n, 2, k}).value_or(0));
        section.rows.push_back(std::move(row));
    }
    return section;
}

CsvSection mstirling_section(const CountTable& table, unsigned max_n, unsigned m_min, unsigned m_max) {
    CsvSection section;
    section.header = {"n"};
    for (unsigned m = m_min; m <= m_max; ++m) section.header.push_back("m=" + std::to_string(m));
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<BigCount> row{n};
        for (unsigned m = m_min; m <= m_max; ++m) {
            row.push_back(table.count({CountKind::mstirling_flat, n, m, 0}).value_or(0));
        }
        section.rows.push_back(std::move(row));
    }
    return section;
}

}  // namespace flatstir::cli
