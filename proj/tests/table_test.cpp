#include <gtest/gtest.h>

#include "support.hpp"

using namespace bqt;
using bqt::test::z2sq_switch;

TEST(OpLookup, TrivialReturnsFirstArgument) {
    auto t = trivial_biquandle(3);
    EXPECT_EQ(op_lookup(t, Op::up, Element(2), Element(3)), Element(2));
    for (Op op : all_ops)
        for (std::size_t a = 1; a <= 3; ++a)
            for (std::size_t b = 1; b <= 3; ++b) EXPECT_EQ(op_lookup(t, op, Element(a), Element(b)), Element(a));
}

TEST(OpLookup, Z2sqSwitchCorners) {
    auto t = z2sq_switch();
    EXPECT_EQ(op_lookup(t, Op::up, Element(1), Element(1)), Element(3));
    EXPECT_EQ(op_lookup(t, Op::down, Element(1), Element(1)), Element(4));
    EXPECT_EQ(op_lookup(t, Op::upbar, Element(1), Element(1)), Element(4));
    EXPECT_EQ(op_lookup(t, Op::downbar, Element(4), Element(4)), Element(3));
}

TEST(OpLookup, OutOfRangeThrows) {
    auto t = trivial_biquandle(3);
    EXPECT_THROW(op_lookup(t, Op::up, Element(0), Element(1)), std::out_of_range);
    EXPECT_THROW(op_lookup(t, Op::down, Element(1), Element(4)), std::out_of_range);
}

TEST(TrivialBiquandle, OrderOne) {
    auto t = trivial_biquandle(1);
    for (Op op : all_ops) EXPECT_EQ(t.block(op), std::vector<std::uint32_t>{0});
}

TEST(TrivialBiquandle, OrderThreeHasConstantRows) {
    auto t = trivial_biquandle(3);
    for (Op op : all_ops)
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b) EXPECT_EQ(t.raw(op, a, b), a);
}

TEST(TrivialBiquandle, ZeroThrows) { EXPECT_THROW(trivial_biquandle(0), std::invalid_argument); }

TEST(BiquandleTable, ConstructorValidatesShapeAndRange) {
    std::vector<std::uint32_t> ok{0, 0, 1, 1};
    EXPECT_NO_THROW(BiquandleTable(2, {ok, ok, ok, ok}));
    EXPECT_THROW(BiquandleTable(2, {ok, ok, ok, std::vector<std::uint32_t>{0, 0, 1}}), std::invalid_argument);
    EXPECT_THROW(BiquandleTable(2, {ok, ok, ok, std::vector<std::uint32_t>{0, 0, 1, 2}}), std::out_of_range);
    EXPECT_THROW(BiquandleTable(0, {}), std::invalid_argument);
}

TEST(IsHomomorphism, IdentityOnZ2sqSwitch) {
    auto t = z2sq_switch();
    EXPECT_TRUE(is_homomorphism(t, t, identity_map(4)));
    EXPECT_TRUE(is_isomorphism(t, t, identity_map(4)));
}

TEST(IsHomomorphism, ConstantMapIntoTrivialTarget) {
    auto src = z2sq_switch();
    auto dst = trivial_biquandle(3);
    for (std::size_t v = 1; v <= 3; ++v) EXPECT_TRUE(is_homomorphism(src, dst, ElementMap(4, Element(v))));
}

TEST(IsHomomorphism, TranspositionOnTrivialOrderTwo) {
    auto t = trivial_biquandle(2);
    ElementMap swap{Element(2), Element(1)};
    EXPECT_TRUE(is_homomorphism(t, t, swap));
    EXPECT_TRUE(is_isomorphism(t, t, swap));
}

TEST(IsHomomorphism, RejectsNonHomomorphism) {
    auto t = z2sq_switch();
    ElementMap swap{Element(2), Element(1), Element(3), Element(4)};
    EXPECT_FALSE(is_homomorphism(t, t, swap));
}

TEST(IsHomomorphism, BadMapsThrow) {
    auto t = trivial_biquandle(2);
    EXPECT_THROW(is_homomorphism(t, t, ElementMap{Element(1)}), std::invalid_argument);
    EXPECT_THROW(is_homomorphism(t, t, ElementMap{Element(1), Element(3)}), std::out_of_range);
}

TEST(Maps, InverseAndBijection) {
    ElementMap f{Element(3), Element(1), Element(2)};
    EXPECT_TRUE(is_bijection(f, 3));
    EXPECT_EQ(inverse_map(f), (ElementMap{Element(2), Element(3), Element(1)}));
    EXPECT_FALSE(is_bijection(ElementMap{Element(1), Element(1)}, 2));
    EXPECT_THROW(inverse_map(ElementMap{Element(1), Element(1)}), std::invalid_argument);
}
