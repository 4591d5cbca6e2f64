#include "support.hpp"

#include "cli.hpp"
#include "csv.hpp"
#include "oeis.hpp"
#include "suites.hpp"

#include "flatstir/errors.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace flatstir::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "flatstir-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

TEST(CliMap, PhiAndPsi) {
    auto r = run({"map", "phi", "0 1 2 | -4 3"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_EQ(r.out, "1 2 2 3 3 1 5 5 4 4\n");
    EXPECT_EQ(run({"map", "psi", "1 1 2 2"}).out, "0 | 1\n");
    EXPECT_EQ(run({"map", "phi", "0 | -3 1 2"}).out, "1 1 4 4 2 3 3 2\n");
    EXPECT_EQ(run({"map", "psi", "1", "1", "4", "4", "2", "3", "3", "2"}).out, "0 | -3 1 2\n");
}

TEST(CliMap, ExitCodes) {
    EXPECT_EQ(run({"map", "phi", "0 | x"}).code, kExitUsage);
    EXPECT_EQ(run({"map", "psi", "1 2 x"}).code, kExitUsage);
    const auto nonflat = run({"map", "psi", "2 2 1 1"});
    EXPECT_EQ(nonflat.code, kExitDomain);
    EXPECT_NE(nonflat.err.find("flattened"), std::string::npos);
    EXPECT_EQ(run({"map", "psi", "1 2 1 2"}).code, kExitDomain);
    EXPECT_EQ(run({"map", "phi", "0 | 2 -1"}).code, kExitDomain);
    EXPECT_EQ(run({"map", "sideways", "0"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(CliGen, CountsAndFormats) {
    auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
    EXPECT_EQ(lines(run({"gen", "typeb", "--n", "3"}).out), 24);
    EXPECT_EQ(lines(run({"gen", "flat", "--n", "5"}).out), 116);
    EXPECT_EQ(run({"gen", "flat", "--n", "1"}).out, "1 1\n");
    EXPECT_EQ(lines(run({"gen", "stirling", "--n", "4", "--m", "3"}).out), 280);
    EXPECT_EQ(run({"gen", "typeb", "--n", "1", "--format", "json"}).out, "[\n  \"0 | 1\",\n  \"0 1\"\n]\n");
    EXPECT_EQ(run({"gen", "stirling", "--n", "12"}).code, kExitBudget);
    EXPECT_EQ(run({"--budget", "10", "gen", "typeb", "--n", "3"}).code, kExitBudget);
    EXPECT_EQ(run({"gen", "partitions", "--n", "3"}).code, kExitUsage);
}

TEST(CliTable, SmallTables) {
    EXPECT_EQ(run({"table", "--max-n", "1"}).out, "n,|Q_n|,|flat|,k=1\n1,1,1,1\n");
    const auto r = run({"table", "--max-n", "4", "--max-k", "4"});
    EXPECT_EQ(r.out,
              "n,|Q_n|,|flat|,k=1,k=2,k=3,k=4\n"
              "1,1,1,1,0,0,0\n"
              "2,3,2,1,1,0,0\n"
              "3,15,6,1,5,0,0\n"
              "4,105,24,1,15,8,0\n");
    EXPECT_EQ(run({"table", "--max-n", "12", "--mode", "filter"}).code, kExitBudget);
}

TEST(CliTable, MStirlingSectionAndFileOutput) {
    const auto path = scratch("table.csv");
    const auto r = run({"table", "--max-n", "5", "--mstirling", "--max-m", "4", "--output", path.string()});
    ASSERT_EQ(r.code, kExitPass);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    const auto sections = parse_csv(text.str());
    ASSERT_EQ(sections.size(), 2u);
    EXPECT_EQ(sections[1].header, (std::vector<std::string>{"n", "m=2", "m=3", "m=4"}));
    EXPECT_EQ(sections[1].rows[4], (std::vector<BigCount>{5, 116, 405, 1008}));
    EXPECT_EQ(format_csv(sections), text.str());
}

TEST(CliTable, JsonMirrorsCountTable) {
    const auto r = run({"table", "--max-n", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitPass);
    const auto table = CountTable::from_json(r.out);
    EXPECT_EQ(*table.count({CountKind::flat_k, 3, 2, 2}), 5);
}

TEST(Csv, ParseErrorsNameTheLine) {
    auto line_of = [](std::string_view text) -> long {
        try {
            parse_csv(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(line_of("n,a\n1,2\n3\n"), 3);
    EXPECT_EQ(line_of("n,a\n1,x\n"), 2);
    EXPECT_EQ(line_of("x,a\n1,2\n"), 1);
    EXPECT_EQ(line_of("n,a\n1,02\n"), 2);
    EXPECT_EQ(line_of("n,a\n1,2"), 2);
    EXPECT_EQ(line_of(""), 1);
    EXPECT_EQ(line_of("n,a\n\n"), 2);
    EXPECT_EQ(line_of("n,a\n1,2\n\n"), 3);
    EXPECT_EQ(line_of("n,,a\n"), 1);
}

TEST(Oeis, ParsesBFiles) {
    const auto seq = parse_bfile("# comment\n\n0 1\n1   2\n2 -6\r\n", "X");
    ASSERT_EQ(seq.terms.size(), 3u);
    EXPECT_EQ(seq.terms[2].first, 2);
    EXPECT_EQ(seq.terms[2].second, -6);
}

TEST(Oeis, MalformedLinesReportLineNumbers) {
    auto line_of = [](std::string_view text) -> long {
        try {
            parse_bfile(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(line_of("0 1\n1\n"), 2);
    EXPECT_EQ(line_of("# c\n0 1\nx 2\n"), 3);
    EXPECT_EQ(line_of("0 1\n1 2z\n"), 2);
    EXPECT_EQ(line_of("0 1\n0 2\n"), 2);
    EXPECT_EQ(line_of("3 1\n2 2\n"), 2);
}

TEST(Oeis, BundledFixturesMatch) {
    const std::vector<std::pair<std::string, std::string>> cases{
        {"b007405.txt", "dowling"}, {"b050488.txt", "flat2"}, {"b355164.txt", "mstirling3"}, {"b355167.txt", "mstirling4"}};
    for (const auto& [file, gen] : cases) {
        const auto path = testing::fixture_dir() / "oeis" / file;
        const auto r = run({"oeis", "--bfile", path.string(), "--generator", gen});
        EXPECT_EQ(r.code, kExitPass) << file << "\n" << r.out << r.err;
    }
}

TEST(Oeis, MismatchNamesFirstIndex) {
    const auto path = scratch("bad.txt");
    std::ofstream(path) << "0 1\n1 2\n2 7\n3 25\n";
    const auto r = run({"oeis", "--bfile", path.string(), "--generator", "dowling"});
    EXPECT_EQ(r.code, kExitMismatch);
    EXPECT_NE(r.out.find("a(2) enumerated [first differing index]"), std::string::npos) << r.out;

    std::ofstream(path) << "0 1\nnot a line\n";
    const auto bad = run({"oeis", "--bfile", path.string(), "--generator", "dowling"});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_NE(bad.err.find("line 2"), std::string::npos);
}

TEST(CliVerify, SuitesPass) {
    EXPECT_EQ(run({"verify", "bijection", "--max-n", "6"}).code, kExitPass);
    const auto t1 = run({"verify", "table1", "--max-n", "7"});
    EXPECT_EQ(t1.code, kExitPass) << t1.out;
    EXPECT_NE(t1.out.find("result PASS"), std::string::npos);
    EXPECT_EQ(run({"verify", "runs", "--max-n", "6"}).code, kExitPass);
    EXPECT_EQ(run({"verify", "table2", "--max-n", "5"}).code, kExitPass);
    EXPECT_EQ(run({"verify", "everything"}).code, kExitUsage);
}

TEST(CliVerify, ConjectureDisagreementIsReported) {
    const auto small = run({"verify", "conjectures", "--max-n", "4"});
    EXPECT_EQ(small.code, kExitPass) << small.out;
    const auto r = run({"verify", "conjectures", "--max-n", "6"});
    EXPECT_EQ(r.code, kExitMismatch);
    EXPECT_NE(r.out.find("FAIL n=5 three-run closed form: expected 70, got 64"), std::string::npos) << r.out;
}

TEST(CliVerify, OutputIsDeterministicApartFromTiming) {
    auto strip = [](std::string s) { return s.substr(0, s.find("[timing]")); };
    EXPECT_EQ(strip(run({"verify", "runs", "--max-n", "5"}).out), strip(run({"verify", "runs", "--max-n", "5"}).out));
}

TEST(CliVerify, BudgetHitExitsWithBudgetCode) {
    EXPECT_EQ(run({"--budget", "100", "verify", "table1", "--max-n", "6"}).code, kExitBudget);
}

TEST(CliCache, BuildCheckTamperClear) {
    const auto path = scratch("cache.json");
    std::filesystem::remove(path);
    ASSERT_EQ(run({"cache", "build", "--path", path.string(), "--max-n", "7", "--mstirling-max-n", "4"}).code,
              kExitPass);
    EXPECT_EQ(run({"cache", "check", "--path", path.string()}).code, kExitPass);
    EXPECT_EQ(run({"cache", "check", "--path", path.string(), "--sample", "5"}).code, kExitPass);

    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    in.close();
    std::string text = buffer.str();
    const auto at = text.find("\"count\": \"1596\"");
    ASSERT_NE(at, std::string::npos);
    text.replace(at, 15, "\"count\": \"1597\"");
    std::ofstream(path, std::ios::trunc) << text;
    const auto r = run({"cache", "check", "--path", path.string()});
    EXPECT_EQ(r.code, kExitMismatch);
    EXPECT_NE(r.err.find("flat_k(n=7, m=2, k=3)"), std::string::npos) << r.err;

    EXPECT_EQ(run({"cache", "clear", "--path", path.string()}).code, kExitPass);
    EXPECT_FALSE(std::filesystem::exists(path));
    EXPECT_EQ(run({"cache", "clear", "--path", path.string()}).code, kExitPass);
    EXPECT_EQ(run({"cache", "check", "--path", path.string()}).code, kExitUsage);
}

}  // namespace
}  // namespace flatstir::cli
