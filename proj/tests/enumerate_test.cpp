#include <gtest/gtest.h>

#include "enum_scan.hpp"
#include "support.hpp"

using namespace bqt;

TEST(Enumerate, OrderOne) {
    auto r = enumerate_biquandles(1);
    ASSERT_EQ(r.tables.size(), 1u);
    EXPECT_EQ(r.tables[0], trivial_biquandle(1));
    EXPECT_EQ(r.classes, (std::vector<std::vector<std::size_t>>{{0}}));
}

TEST(Enumerate, OrderTwoMatchesFullScan) {
    std::uint64_t candidates = 0;
    auto scanned = bqt::test::scan_all_unbarred(2, &candidates);
    EXPECT_EQ(candidates, 256u);
    auto r = enumerate_biquandles(2);
    EXPECT_EQ(r.tables, scanned);
    EXPECT_EQ(r.tables.size(), 2u);
    EXPECT_EQ(r.classes.size(), 2u);
}

TEST(Enumerate, OrderThreeMatchesPermutationColumnScan) {
    std::uint64_t candidates = 0;
    auto scanned = bqt::test::scan_permutation_columns(3, &candidates);
    EXPECT_EQ(candidates, 46656u);
    auto r = enumerate_biquandles(3);
    EXPECT_EQ(r.tables, scanned);
    EXPECT_EQ(r.tables.size(), 36u);
    EXPECT_EQ(r.classes.size(), 15u);
}

TEST(Enumerate, OrderTwoScansAgree) {
    EXPECT_EQ(bqt::test::scan_all_unbarred(2), bqt::test::scan_permutation_columns(2));
}

TEST(Enumerate, ClassesPartitionAndAreIsomorphismClasses) {
    for (std::size_t n = 1; n <= 3; ++n) {
        auto r = enumerate_biquandles(n);
        std::vector<std::size_t> cls_of(r.tables.size(), SIZE_MAX);
        for (std::size_t c = 0; c < r.classes.size(); ++c)
            for (auto i : r.classes[c]) {
                EXPECT_EQ(cls_of[i], SIZE_MAX);
                cls_of[i] = c;
            }
        for (std::size_t i = 0; i < r.tables.size(); ++i)
            for (std::size_t j = 0; j < r.tables.size(); ++j)
                EXPECT_EQ(cls_of[i] == cls_of[j], !all_isomorphisms(r.tables[i], r.tables[j]).empty());
    }
}

TEST(Enumerate, EveryTableIsABiquandleAndSolvesYangBaxter) {
    for (std::size_t n = 1; n <= 3; ++n)
        for (const auto& t : enumerate_biquandles(n).tables) {
            EXPECT_TRUE(verify_biquandle(t).passed);
            EXPECT_TRUE(yang_baxter_check(t));
        }
}

TEST(Enumerate, ContainsKnownFamilies) {
    auto tables = enumerate_biquandles(3).tables;
    auto has = [&](const BiquandleTable& t) { return std::find(tables.begin(), tables.end(), t) != tables.end(); };
    EXPECT_TRUE(has(trivial_biquandle(3)));
    for (const auto& M : bqt::test::scalar_modules(3)) EXPECT_TRUE(has(make_alexander(M)));
}

TEST(Enumerate, Deterministic) {
    auto a = enumerate_biquandles(3), b = enumerate_biquandles(3);
    EXPECT_EQ(a.tables, b.tables);
    EXPECT_EQ(a.classes, b.classes);
}

TEST(Enumerate, RefusesOutOfRangeOrders) {
    EXPECT_THROW(enumerate_biquandles(0), std::invalid_argument);
    EXPECT_THROW(enumerate_biquandles(4), std::invalid_argument);
    EXPECT_THROW(enumerate_biquandles(5, true), std::invalid_argument);
}
