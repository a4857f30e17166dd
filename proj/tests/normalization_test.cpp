#include <gtest/gtest.h>

#include "normalization_checks.hpp"
#include "support.hpp"

using namespace bqt;

TEST(ZeroImage, HomomorphismsSendZeroIntoKernel) {
    auto tally = bqt::test::check_zero_lands_in_kernel(bqt::test::small_modules(8));
    EXPECT_TRUE(tally.violations.empty()) << tally.violations.front();
    EXPECT_GT(tally.checked, 100u);
}

TEST(ZeroImage, Z8ImagesOfZeroAreExactlyTheKernel) {
    auto M = FiniteModule::cyclic(8, 3, 5);
    auto t = make_alexander(M);
    std::vector<std::uint32_t> images;
    for (auto y : M.elements()) {
        HomSearchOptions opts;
        opts.injective = true;
        opts.fixed = {{M.label(M.zero()), M.label(y)}};
        bool found = false;
        search_homomorphisms(t, t, opts, [&](const ElementMap&) {
            found = true;
            return false;
        });
        if (found) images.push_back(y.code());
    }
    EXPECT_EQ(images, (std::vector<std::uint32_t>{0, 4}));
}

TEST(Translations, AutomorphismExactlyOnKernel) {
    auto mods = bqt::test::small_modules(8);
    for (auto& M : bqt::test::scalar_modules(9)) mods.push_back(M);
    auto tally = bqt::test::check_translations(mods);
    EXPECT_TRUE(tally.violations.empty()) << tally.violations.front();
    EXPECT_GT(tally.checked, 500u);
}

TEST(Translations, Z8Fixtures) {
    auto M = FiniteModule::cyclic(8, 3, 5);
    auto t = make_alexander(M);
    EXPECT_EQ(translation_map(M, M.zero()), identity_map(8));
    EXPECT_TRUE(is_isomorphism(t, t, translation_map(M, ModuleElement(4))));
    auto g1 = translation_map(M, ModuleElement(1));
    EXPECT_FALSE(is_homomorphism(t, t, g1));
    // First failure in row-major order: up(x_1, x_1).
    auto x1 = M.label(ModuleElement(1)).zero_based();
    auto img = g1[x1].zero_based();
    EXPECT_NE(t.raw(Op::up, img, img), g1[t.raw(Op::up, x1, x1)].zero_based());
}

TEST(NormalizeIso, FixesZeroAndStaysIsomorphism) {
    for (const auto& M : bqt::test::small_modules(8)) {
        auto t = make_alexander(M);
        auto zero = M.label(M.zero());
        for (const auto& f : all_isomorphisms(t, t)) {
            auto g = normalize_iso(M, M, f);
            EXPECT_EQ(g[zero.zero_based()], zero);
            EXPECT_TRUE(is_isomorphism(t, t, g));
            if (f[zero.zero_based()] == zero) { EXPECT_EQ(g, f); }
        }
    }
}

TEST(NormalizeIso, TranslationNormalizesToIdentity) {
    auto M = FiniteModule::cyclic(8, 3, 5);
    EXPECT_EQ(normalize_iso(M, M, translation_map(M, ModuleElement(4))), identity_map(8));
    EXPECT_THROW(normalize_iso(M, M, translation_map(M, ModuleElement(1))), std::invalid_argument);
}

TEST(UnbarredEquations, ImplyBarredOnSmallModules) {
    auto tally = bqt::test::check_unbarred_suffices(bqt::test::small_modules(5));
    EXPECT_TRUE(tally.violations.empty()) << tally.violations.front();
    EXPECT_GT(tally.checked, 100u);
}
