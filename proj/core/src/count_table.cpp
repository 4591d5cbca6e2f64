#include "flatstir/count_table.hpp"

#include "flatstir/errors.hpp"

#include <json.hpp>

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

namespace flatstir {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::pair<CountKind, std::string_view>, 5> kKindNames{{
    {CountKind::stirling, "stirling"},
    {CountKind::flat, "flat"},
    {CountKind::flat_k, "flat_k"},
    {CountKind::typeb, "typeb"},
    {CountKind::mstirling_flat, "mstirling_flat"},
}};

constexpr std::array<std::pair<Provenance, std::string_view>, 3> kProvenanceNames{{
    {Provenance::formula, "formula"},
    {Provenance::enumeration, "enumeration"},
    {Provenance::cached, "cached"},
}};

template <class Enum, std::size_t N>
std::string_view name_of(const std::array<std::pair<Enum, std::string_view>, N>& names, Enum value) {
    for (const auto& [e, name] : names) {
        if (e == value) return name;
    }
    return "?";
}

template <class Enum, std::size_t N>
std::optional<Enum> value_of(const std::array<std::pair<Enum, std::string_view>, N>& names,
                             std::string_view text) {
    for (const auto& [e, name] : names) {
        if (name == text) return e;
    }
    return std::nullopt;
}

[[noreturn]] void json_error(std::size_t entry, const std::string& expected, const std::string& what) {
    throw ParseError(entry, expected, "count table entry " + std::to_string(entry) + ": " + what);
}

unsigned read_index(const Json& obj, const char* field, std::size_t entry) {
    const auto it = obj.find(field);
    if (it == obj.end() || !it->is_number_unsigned()) {
        json_error(entry, std::string("nonnegative integer '") + field + "'",
                   std::string("missing or invalid '") + field + "'");
    }
    const auto value = it->get<std::uint64_t>();
    if (value > 1'000'000) json_error(entry, std::string("small '") + field + "'", "index too large");
    return static_cast<unsigned>(value);
}

std::string read_string(const Json& obj, const char* field, std::size_t entry) {
    const auto it = obj.find(field);
    if (it == obj.end() || !it->is_string()) {
        json_error(entry, std::string("string '") + field + "'",
                   std::string("missing or invalid '") + field + "'");
    }
    return it->get<std::string>();
}

}  // namespace

std::string_view to_string(CountKind kind) noexcept { return name_of(kKindNames, kind); }
std::string_view to_string(Provenance provenance) noexcept { return name_of(kProvenanceNames, provenance); }

std::optional<CountKind> parse_count_kind(std::string_view text) noexcept {
    return value_of(kKindNames, text);
}

std::optional<Provenance> parse_provenance(std::string_view text) noexcept {
    return value_of(kProvenanceNames, text);
}

std::string describe(const CountKey& key) {
    std::ostringstream out;
    out << to_string(key.kind) << "(n=" << key.n << ", m=" << key.m << ", k=" << key.k << ")";
    return out.str();
}

void CountTable::record(const CountKey& key, const BigCount& count, Provenance provenance) {
    const auto [it, inserted] = entries_.try_emplace(key, CountEntry{count, provenance});
    if (!inserted && it->second.count != count) {
        throw CoherenceError(describe(key) + ": recorded " + to_decimal(it->second.count) +
                             ", new value " + to_decimal(count));
    }
}

std::optional<BigCount> CountTable::count(const CountKey& key) const {
    const auto* entry = find(key);
    if (entry == nullptr) return std::nullopt;
    return entry->count;
}

const CountEntry* CountTable::find(const CountKey& key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

void CountTable::merge(const CountTable& other) {
    for (const auto& [key, entry] : other.entries_) {
        const auto* mine = find(key);
        if (mine != nullptr && mine->count != entry.count) {
            throw CoherenceError(describe(key) + ": recorded " + to_decimal(mine->count) +
                                 ", merged value " + to_decimal(entry.count));
        }
    }
    for (const auto& [key, entry] : other.entries_) entries_.try_emplace(key, entry);
}

std::string CountTable::to_json() const {
    Json doc;
    doc["version"] = kVersion;
    Json list = Json::array();
    for (const auto& [key, entry] : entries_) {
        Json e;
        e["kind"] = std::string(to_string(key.kind));
        e["n"] = key.n;
        e["m"] = key.m;
        e["k"] = key.k;
        e["count"] = to_decimal(entry.count);
        e["provenance"] = std::string(to_string(entry.provenance));
        list.push_back(std::move(e));
    }
    doc["entries"] = std::move(list);
    return doc.dump(2) + "\n";
}

CountTable CountTable::from_json(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.byte, "JSON document", std::string("count table: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(0, "JSON object", "count table: top level is not an object");
    const auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer()) {
        throw ParseError(0, "integer 'version'", "count table: missing version");
    }
    if (version->get<long long>() != kVersion) {
        throw ParseError(0, "version 1", "count table: unsupported version " + version->dump());
    }
    const auto entries = doc.find("entries");
    if (entries == doc.end() || !entries->is_array()) {
        throw ParseError(0, "array 'entries'", "count table: missing entries");
    }

    CountTable table;
    std::size_t index = 0;
    for (const auto& e : *entries) {
        if (!e.is_object()) json_error(index, "object", "entry is not an object");
        const auto kind_text = read_string(e, "kind", index);
        const auto kind = parse_count_kind(kind_text);
        if (!kind) json_error(index, "known kind", "unknown kind '" + kind_text + "'");
        const auto provenance_text = read_string(e, "provenance", index);
        const auto provenance = parse_provenance(provenance_text);
        if (!provenance) json_error(index, "known provenance", "unknown provenance '" + provenance_text + "'");
        CountKey key{*kind, read_index(e, "n", index), read_index(e, "m", index), read_index(e, "k", index)};
        BigCount count;
        try {
            count = parse_decimal(read_string(e, "count", index));
        } catch (const ParseError&) {
            json_error(index, "decimal string 'count'", "count is not a decimal string");
        }
        table.record(key, count, *provenance);
        ++index;
    }
    return table;
}

void CountTable::save(const std::filesystem::path& path) const {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = std::filesystem::path(path).concat(".tmp");
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << to_json();
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

CountTable CountTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return from_json(buffer.str());
}

}  // namespace flatstir
