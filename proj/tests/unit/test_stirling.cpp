#include "support.hpp"

#include "flatstir/enumeration.hpp"
#include "flatstir/errors.hpp"

#include <gtest/gtest.h>

#include <set>

namespace flatstir {
namespace {

using testing::letters;

TEST(StirlingPredicate, RejectsLetterBetweenLargerPair) {
    EXPECT_FALSE(is_stirling(parse_word("112293883946677545"), 2));
    EXPECT_TRUE(is_stirling(parse_word("123321445566778899"), 2));
    EXPECT_TRUE(is_stirling({}, 2));
}

TEST(StirlingPredicate, ChecksMultiplicity) {
    EXPECT_FALSE(is_stirling(letters({1, 1, 1}), 2));
    EXPECT_TRUE(is_stirling(letters({1, 1, 1}), 3));
    EXPECT_FALSE(is_stirling(letters({1, 1, 3, 3}), 2));  // value 2 missing
    EXPECT_FALSE(is_stirling(letters({0, 0}), 2));
    EXPECT_TRUE(is_stirling(letters({1}), 1));
    EXPECT_TRUE(is_stirling(letters({2, 1}), 1));
}

TEST(StirlingPredicate, ViolationNamesTheIndex) {
    const auto why = stirling_violation(letters({1, 2, 1, 2}), 2);
    ASSERT_TRUE(why.has_value());
    EXPECT_NE(why->find("index"), std::string::npos);
}

TEST(StirlingWordType, FromLettersValidates) {
    EXPECT_THROW(StirlingWord::from_letters(letters({2, 1, 1, 2})), DomainError);
    const auto w = StirlingWord::from_letters(letters({1, 2, 2, 1}));
    EXPECT_EQ(w.order(), 2u);
    EXPECT_EQ(w.multiplicity(), 2u);
    EXPECT_EQ(w.to_string(), "1 2 2 1");
}

TEST(RunDecompositionTest, LeadingTermsOfFlattenedExample) {
    const auto w = StirlingWord::parse("112299388346677455");
    const auto d = run_decomposition(w);
    EXPECT_EQ(d.run_count(), 4u);
    EXPECT_EQ(d.leading_terms, letters({1, 3, 3, 4}));
    EXPECT_TRUE(is_flattened(w));
}

TEST(RunDecompositionTest, SortedWordIsOneRun) {
    const auto d = run_decomposition(StirlingWord::parse("1122"));
    EXPECT_EQ(d.run_count(), 1u);
    EXPECT_EQ(d.leading_terms, letters({1}));
}

TEST(RunDecompositionTest, SegmentsOfThreeRunWord) {
    const auto w = StirlingWord::parse("14412332");
    const auto d = run_decomposition(w);
    ASSERT_EQ(d.run_count(), 3u);
    EXPECT_EQ(d.leading_terms, letters({1, 1, 2}));
    std::vector<Letter> joined;
    for (const auto& seg : d.segments) {
        joined.insert(joined.end(), w.letters().begin() + static_cast<std::ptrdiff_t>(seg.first),
                      w.letters().begin() + static_cast<std::ptrdiff_t>(seg.second));
    }
    EXPECT_EQ(joined, w.letters());
}

TEST(FlattenedPredicate, Examples) {
    EXPECT_FALSE(is_flattened(StirlingWord::parse("123321445566778899")));
    EXPECT_TRUE(is_flattened(StirlingWord::parse("11")));
    EXPECT_TRUE(is_flattened(std::span<const Letter>{}));
    EXPECT_EQ(run_count(std::span<const Letter>{}), 0u);
}

TEST(DescentCount, Examples) {
    // Frozen from tests/oracles/brute_force.py.
    EXPECT_EQ(descent_count(StirlingWord::parse("11223344")), 0u);
    EXPECT_EQ(descent_count(StirlingWord::parse("12233441")), 1u);
    EXPECT_EQ(descent_count(StirlingWord::parse("11332442")), 2u);
    EXPECT_EQ(descent_count(StirlingWord::parse("14412332")), 2u);
}

TEST(WordText, CanonicalAndCompactForms) {
    EXPECT_EQ(parse_word("1 1 2 2"), letters({1, 1, 2, 2}));
    EXPECT_EQ(parse_word("1122"), letters({1, 1, 2, 2}));
    EXPECT_EQ(parse_word("  1   10 \t 10 1 "), letters({1, 10, 10, 1}));
    EXPECT_EQ(format_word(letters({1, 1, 2, 2, 9, 9, 3, 8, 8, 3, 10, 10, 11, 11, 4, 6, 6, 7, 7, 4, 5, 5})),
              "1 1 2 2 9 9 3 8 8 3 10 10 11 11 4 6 6 7 7 4 5 5");
    EXPECT_EQ(format_word({}), "");
}

TEST(WordText, ParseErrorsCarryOffsets) {
    try {
        parse_word("1 1 x 2");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_THROW(parse_word("1 0 0 1"), ParseError);
    EXPECT_THROW(parse_word("1 256"), ParseError);
    EXPECT_THROW(parse_word("12a"), ParseError);
}

TEST(Generation, CountsMatchProductFormula) {
    for (unsigned m = 1; m <= 5; ++m) {
        for (unsigned n = 0; n <= 6; ++n) {
            if (stirling_word_count(n, m) > 2'000'000) continue;
            std::uint64_t count = 0;
            for_each_stirling(n, m, [&](std::span<const Letter> w) {
                ++count;
                ASSERT_TRUE(is_stirling(w, m));
            });
            EXPECT_EQ(BigCount(count), stirling_word_count(n, m)) << "n=" << n << " m=" << m;
        }
    }
    for (unsigned n = 1; n <= 8; ++n) EXPECT_EQ(stirling_word_count(n, 2), double_factorial(n));
    EXPECT_EQ(stirling_word_count(4, 3), 280);
}

TEST(Generation, EmptyOrderYieldsEmptyWord) {
    const auto words = generate_stirling(0, 3);
    ASSERT_EQ(words.size(), 1u);
    EXPECT_TRUE(words[0].empty());
    const auto flat = generate_flattened_filter(0, 2);
    EXPECT_EQ(flat.size(), 1u);
}

TEST(Generation, OrderIsInsertionOrderAndDuplicateFree) {
    const auto words = generate_stirling(3, 2);
    ASSERT_EQ(words.size(), 15u);
    EXPECT_EQ(words.front().to_string(), "3 3 2 2 1 1");
    EXPECT_EQ(words.back().to_string(), "1 1 2 2 3 3");
    std::set<StirlingWord> distinct(words.begin(), words.end());
    EXPECT_EQ(distinct.size(), words.size());
    EXPECT_EQ(generate_stirling(3, 2), words);
}

TEST(Generation, FlattenedFilterSmallCases) {
    const auto two = generate_flattened_filter(2, 2);
    std::set<std::string> got;
    for (const auto& w : two) got.insert(w.to_string());
    EXPECT_EQ(got, (std::set<std::string>{"1 1 2 2", "1 2 2 1"}));
    EXPECT_EQ(generate_flattened_filter(5, 2).size(), 116u);
    EXPECT_EQ(generate_flattened_filter(5, 3).size(), 405u);
    EXPECT_EQ(generate_flattened_filter(4, 3).size(), 63u);
    EXPECT_EQ(generate_flattened_filter(3, 3).size(), 12u);
}

TEST(Generation, FlattenedWordsStartWithOne) {
    for (unsigned n = 1; n <= 6; ++n) {
        for_each_flattened(n, 2, [&](std::span<const Letter> w) { ASSERT_EQ(w.front(), 1); });
    }
}

TEST(Generation, BudgetIsEnforced) {
    EXPECT_THROW(generate_stirling(12, 2), BudgetExceeded);
    EXPECT_THROW(generate_stirling(5, 2, EnumerationBudget{100}), BudgetExceeded);
    EXPECT_NO_THROW(generate_stirling(5, 2, EnumerationBudget{945}));
}

TEST(Tally, HistogramsFrozenFromOracle) {
    const auto h4 = tally_flattened_runs(4, 2, 2);
    EXPECT_EQ(h4.words, 105u);
    EXPECT_EQ(h4.flattened, 24u);
    EXPECT_EQ(h4.flattened_with_runs(1), 1u);
    EXPECT_EQ(h4.flattened_with_runs(2), 15u);
    EXPECT_EQ(h4.flattened_with_runs(3), 8u);
    const auto h5 = tally_flattened_runs(5, 2, 3);
    EXPECT_EQ(h5.flattened_with_runs(2), 37u);
    EXPECT_EQ(h5.flattened_with_runs(3), 70u);
    EXPECT_EQ(h5.flattened_with_runs(4), 8u);
    EXPECT_EQ(h5.max_flattened_runs(), 4u);
}

TEST(Tally, ThreadCountDoesNotChangeResult) {
    const auto one = tally_flattened_runs(7, 2, 1);
    for (unsigned threads : {2u, 3u, 8u}) {
        const auto many = tally_flattened_runs(7, 2, threads);
        EXPECT_EQ(many.words, one.words);
        EXPECT_EQ(many.flattened_by_runs, one.flattened_by_runs);
    }
}

}  // namespace
}  // namespace flatstir
