#include "cli.hpp"

#include "csv.hpp"
#include "oeis.hpp"
#include "suites.hpp"

#include "flatstir/bijection.hpp"
#include "flatstir/count_table.hpp"
#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace flatstir::cli {

namespace {

struct GlobalOptions {
    unsigned threads = 0;
    std::uint64_t budget = EnumerationBudget::kDefaultCap;

    EnumerationBudget enumeration_budget() const { return {budget}; }
};

struct GenOptions {
    std::string object;
    unsigned n = 0;
    unsigned m = 2;
    std::string format = "lines";
};

struct MapOptions {
    std::string direction;
    std::vector<std::string> text;
};

struct TableOptions {
    unsigned max_n = 7;
    unsigned max_k = 0;
    std::string mode = "auto";
    std::string format = "csv";
    bool mstirling = false;
    unsigned max_m = 5;
    std::string output;
};

struct VerifyOptions {
    std::string suite;
    unsigned max_n = 8;
    std::string mode = "auto";
};

struct OeisOptions {
    std::string seq;
    std::string bfile;
    std::string generator;
};

struct CacheOptions {
    std::string action;
    std::string path = "flatstir-cache.json";
    unsigned max_n = 9;
    unsigned mstirling_max_n = 6;
    unsigned max_m = 4;
    std::size_t sample = 0;
};

// Streams objects either one per line or as a JSON array of strings.
class ObjectWriter {
public:
    ObjectWriter(std::ostream& out, bool json) : out_(out), json_(json) {
        if (json_) out_ << "[";
    }

    void write(const std::string& text) {
        if (json_) {
            out_ << (count_ == 0 ? "\n  \"" : ",\n  \"") << text << "\"";
        } else {
            out_ << text << "\n";
        }
        ++count_;
    }

    void finish() {
        if (json_) out_ << (count_ == 0 ? "]\n" : "\n]\n");
    }

private:
    std::ostream& out_;
    bool json_;
    std::size_t count_ = 0;
};

TableSource table_source(const std::string& mode) {
    if (mode == "filter") return TableSource::filter;
    if (mode == "bijection") return TableSource::bijection;
    return TableSource::automatic;
}

TableMode table_mode(const std::string& mode, unsigned max_n) {
    if (mode == "filter") return TableMode::filter;
    if (mode == "bijection") return TableMode::bijection;
    return max_n <= 8 ? TableMode::filter : TableMode::bijection;
}

int finish_report(const VerificationReport& report, std::ostream& out) {
    report.render(out);
    if (report.budget_hit) return kExitBudget;
    return report.passed() ? kExitPass : kExitMismatch;
}

int cmd_gen(const GenOptions& o, const GlobalOptions& g, std::ostream& out) {
    ObjectWriter writer(out, o.format == "json");
    const auto budget = g.enumeration_budget();
    if (o.object == "stirling") {
        for_each_stirling(o.n, o.m, [&](std::span<const Letter> w) { writer.write(format_word(w)); }, budget);
    } else if (o.object == "flat") {
        for_each_flattened(o.n, o.m, [&](std::span<const Letter> w) { writer.write(format_word(w)); }, budget);
    } else {
        for_each_typeb(o.n, [&](const TypeBPartition& p) { writer.write(format_adler(p)); }, budget);
    }
    writer.finish();
    return kExitPass;
}

std::string map_one(const std::string& direction, const std::string& text) {
    if (direction == "phi") return phi(parse_adler(text), CheckOutput::yes).to_string();
    return format_adler(psi(parse_word(text)));
}

int cmd_map(const MapOptions& o, std::istream& in, std::ostream& out) {
    if (!o.text.empty()) {
        std::string joined;
        for (const auto& part : o.text) joined += (joined.empty() ? "" : " ") + part;
        out << map_one(o.direction, joined) << "\n";
        return kExitPass;
    }
    // No argument: map each non-empty line of standard input.
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out << map_one(o.direction, line) << "\n";
    }
    return kExitPass;
}

int cmd_table(const TableOptions& o, const GlobalOptions& g, std::ostream& out) {
    if (o.max_n == 0) throw CLI::ValidationError("--max-n", "must be at least 1");
    const auto budget = g.enumeration_budget();
    const unsigned m_top = std::max(2u, o.max_m);

    CountTable table = flat_k_table(o.max_n, table_mode(o.mode, o.max_n), g.threads, budget);
    if (o.mstirling) table.merge(mstirling_table(o.max_n, 2, m_top, g.threads, budget));

    std::string text;
    if (o.format == "json") {
        text = table.to_json();
    } else {
        std::vector<CsvSection> sections{flat_section(table, o.max_n, o.max_k)};
        if (o.mstirling) sections.push_back(mstirling_section(table, o.max_n, 2, m_top));
        text = format_csv(sections);
    }
    if (o.output.empty()) {
        out << text;
    } else {
        std::ofstream file(o.output, std::ios::binary | std::ios::trunc);
        if (!file || !(file << text)) throw std::runtime_error("cannot write " + o.output);
    }
    return kExitPass;
}

int cmd_verify(const VerifyOptions& o, const GlobalOptions& g, std::ostream& out) {
    SuiteOptions options{g.threads, g.enumeration_budget(), table_source(o.mode)};
    return finish_report(run_suite(*parse_suite(o.suite), o.max_n, options), out);
}

int cmd_oeis(const OeisOptions& o, const GlobalOptions& g, std::ostream& out) {
    const OeisSequence seq = load_bfile(o.bfile, o.seq);
    return finish_report(compare_with_bfile(seq, *parse_generator(o.generator), g.enumeration_budget()), out);
}

CountTable build_cache(const CacheOptions& o, const GlobalOptions& g) {
    const auto budget = g.enumeration_budget();
    CountTable table = flat_k_table(o.max_n, TableMode::bijection, g.threads, budget);
    for (unsigned n = 0; n < o.max_n; ++n) table.record({CountKind::typeb, n, 0, 0}, dowling(n), Provenance::formula);
    if (o.mstirling_max_n > 0 && o.max_m >= 2) {
        table.merge(mstirling_table(o.mstirling_max_n, 2, o.max_m, g.threads, budget));
    }
    return table;
}

int cmd_cache(const CacheOptions& o, const GlobalOptions& g, std::ostream& out, std::ostream& err) {
    const std::filesystem::path path(o.path);
    if (o.action == "clear") {
        if (std::filesystem::remove(path)) {
            out << "removed " << o.path << "\n";
        } else {
            out << "nothing to clear at " << o.path << "\n";
        }
        return kExitPass;
    }
    if (o.action == "build") {
        const CountTable table = build_cache(o, g);
        table.save(path);
        out << "wrote " << table.size() << " entries to " << o.path << "\n";
        return kExitPass;
    }

    const CountTable table = CountTable::load(path);
    CountTable sample;
    const std::size_t stride =
        o.sample == 0 || o.sample >= table.size() ? 1 : (table.size() + o.sample - 1) / o.sample;
    std::size_t i = 0;
    for (const auto& [key, entry] : table.entries()) {
        if (i++ % stride == 0) sample.record(key, entry.count, entry.provenance);
    }
    CountDeriver deriver(g.threads, g.enumeration_budget());
    const auto issues = check_coherence(sample, deriver);
    for (const auto& issue : issues) err << "coherence failure: " << issue.message << "\n";
    out << "checked " << sample.size() << " of " << table.size() << " entries, " << issues.size()
        << " incoherent\n";
    return issues.empty() ? kExitPass : kExitMismatch;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stirling permutations, flattened words and type B set partitions"};
    app.name("flatstirling");
    app.require_subcommand(1);

    GlobalOptions global;
    global.threads = default_thread_count();
    app.add_option("--threads", global.threads, "Worker threads for enumeration")->capture_default_str();
    app.add_option("--budget", global.budget, "Largest number of objects a generator may produce")
        ->capture_default_str();

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Generate objects in their deterministic order");
    gen_cmd->add_option("object", gen.object, "stirling | flat | typeb")
        ->required()
        ->check(CLI::IsMember({"stirling", "flat", "typeb"}));
    gen_cmd->add_option("--n", gen.n, "Order (typeb: partitions of [-n, n])")->required();
    gen_cmd->add_option("--m", gen.m, "Multiplicity of each letter")->capture_default_str()->check(CLI::Range(1, 255));
    gen_cmd->add_option("--format", gen.format, "lines | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"lines", "json"}));

    MapOptions map;
    auto* map_cmd = app.add_subcommand("map", "Apply phi (partition to word) or psi (word to partition)");
    map_cmd->add_option("direction", map.direction, "phi | psi")->required()->check(CLI::IsMember({"phi", "psi"}));
    map_cmd->add_option("text", map.text, "Input; read line by line from stdin when omitted");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Emit counts of flattened words by number of runs");
    table_cmd->add_option("--max-n", table.max_n, "Largest order")->capture_default_str();
    table_cmd->add_option("--max-k", table.max_k, "Run-count columns (0: up to the largest possible)")
        ->capture_default_str();
    table_cmd->add_option("--mode", table.mode, "auto | filter | bijection")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "filter", "bijection"}));
    table_cmd->add_option("--format", table.format, "csv | json")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "json"}));
    table_cmd->add_flag("--mstirling", table.mstirling, "Also count flattened m-Stirling words, m = 2..max-m");
    table_cmd->add_option("--max-m", table.max_m, "Largest multiplicity with --mstirling")
        ->capture_default_str()
        ->check(CLI::Range(2, 255));
    table_cmd->add_option("--output", table.output, "Write to this file instead of stdout");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", verify.suite, "bijection | runs | table1 | table2 | conjectures | all")
        ->required()
        ->check(CLI::IsMember({"bijection", "runs", "table1", "table2", "conjectures", "all"}));
    verify_cmd->add_option("--max-n", verify.max_n, "Largest word order examined")->capture_default_str();
    verify_cmd->add_option("--mode", verify.mode, "Table source for table1: auto | filter | bijection")
        ->capture_default_str()
        ->check(CLI::IsMember({"auto", "filter", "bijection"}));

    OeisOptions oeis;
    auto* oeis_cmd = app.add_subcommand("oeis", "Compare a generator against an OEIS b-file");
    oeis_cmd->add_option("--seq", oeis.seq, "Sequence id used in the report (default: file stem)");
    oeis_cmd->add_option("--bfile", oeis.bfile, "Path to the b-file")->required();
    oeis_cmd->add_option("--generator", oeis.generator, "dowling | flat2 | mstirling3 | mstirling4")
        ->required()
        ->check(CLI::IsMember({"dowling", "flat2", "mstirling3", "mstirling4"}));

    CacheOptions cache;
    auto* cache_cmd = app.add_subcommand("cache", "Build, check or clear the count cache");
    cache_cmd->add_option("action", cache.action, "build | check | clear")
        ->required()
        ->check(CLI::IsMember({"build", "check", "clear"}));
    cache_cmd->add_option("--path", cache.path, "Cache file")->capture_default_str();
    cache_cmd->add_option("--max-n", cache.max_n, "build: largest order for run counts")
        ->capture_default_str()
        ->check(CLI::Range(1, 12));
    cache_cmd->add_option("--mstirling-max-n", cache.mstirling_max_n, "build: largest order for m-Stirling counts")
        ->capture_default_str();
    cache_cmd->add_option("--max-m", cache.max_m, "build: largest multiplicity")->capture_default_str();
    cache_cmd->add_option("--sample", cache.sample, "check: re-derive about this many entries (0: all)")
        ->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        err << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*gen_cmd) return cmd_gen(gen, global, out);
        if (*map_cmd) return cmd_map(map, std::cin, out);
        if (*table_cmd) return cmd_table(table, global, out);
        if (*verify_cmd) return cmd_verify(verify, global, out);
        if (*oeis_cmd) return cmd_oeis(oeis, global, out);
        if (*cache_cmd) return cmd_cache(cache, global, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const CanonicalError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const NotTypeBPartition& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const CoherenceError& e) {
        err << "coherence failure: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const PrecisionInsufficient& e) {
        err << "precision: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace flatstir::cli
