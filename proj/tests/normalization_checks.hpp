#ifndef BQT_TEST_NORMALIZATION_CHECKS_HPP
#define BQT_TEST_NORMALIZATION_CHECKS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <bqt/bqt.hpp>

namespace bqt::test {

struct Tally {
    std::uint64_t checked = 0;
    std::vector<std::string> violations;
};

// Homomorphisms fix the kernel: for each candidate image y of 0, look for any
// homomorphism with f(0) = y and require (1-s')y = 0 whenever one exists.
inline Tally check_zero_lands_in_kernel(const std::vector<FiniteModule>& mods) {
    Tally tally;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
            const auto &M = mods[i], &M2 = mods[j];
            auto a = make_alexander(M), b = make_alexander(M2);
            for (auto y : M2.elements()) {
                HomSearchOptions opts;
                opts.fixed = {{M.label(M.zero()), M2.label(y)}};
                bool found = false;
                search_homomorphisms(a, b, opts, [&](const ElementMap& f) {
                    found = is_homomorphism(a, b, f);
                    return false;
                });
                if (!found) continue;
                ++tally.checked;
                if (!M2.one_minus_s(y).is_zero())
                    tally.violations.push_back("pair " + std::to_string(i) + "," + std::to_string(j) +
                                               ": f(0) = " + M2.format(y));
            }
        }
    return tally;
}

// Translation by z is an automorphism exactly when (1-s)z = 0.
inline Tally check_translations(const std::vector<FiniteModule>& mods) {
    Tally tally;
    for (std::size_t i = 0; i < mods.size(); ++i) {
        const auto& M = mods[i];
        auto t = make_alexander(M);
        for (auto z : M.elements()) {
            ++tally.checked;
            bool automorphism = is_isomorphism(t, t, translation_map(M, z));
            if (automorphism != M.one_minus_s(z).is_zero())
                tally.violations.push_back("module " + std::to_string(i) + ": z = " + M.format(z));
        }
    }
    return tally;
}

inline bool preserves(const BiquandleTable& a, const BiquandleTable& b, const ElementMap& f, Op op) {
    for (std::size_t x = 0; x < a.order(); ++x)
        for (std::size_t y = 0; y < a.order(); ++y)
            if (b.raw(op, f[x].zero_based(), f[y].zero_based()) != f[a.raw(op, x, y)].zero_based()) return false;
    return true;
}

// Every 0-fixing map preserving up and down also preserves upbar and downbar.
// All maps are scanned directly; the masked search must find the same set.
inline Tally check_unbarred_suffices(const std::vector<FiniteModule>& mods) {
    Tally tally;
    for (std::size_t i = 0; i < mods.size(); ++i)
        for (std::size_t j = 0; j < mods.size(); ++j) {
            const auto &M = mods[i], &M2 = mods[j];
            auto a = make_alexander(M), b = make_alexander(M2);
            auto zero = M.label(M.zero()).zero_based();
            auto zero2 = M2.label(M2.zero());
            std::vector<ElementMap> scanned;
            ElementMap f(M.size(), Element(1));
            f[zero] = zero2;
            for (;;) {
                if (preserves(a, b, f, Op::up) && preserves(a, b, f, Op::down)) {
                    ++tally.checked;
                    scanned.push_back(f);
                    if (!is_homomorphism(a, b, f))
                        tally.violations.push_back("pair " + std::to_string(i) + "," + std::to_string(j));
                }
                std::size_t k = 0;
                for (; k < f.size(); ++k) {
                    if (k == zero) continue;
                    if (f[k].index() < M2.size()) break;
                    f[k] = Element(1);
                }
                if (k == f.size()) break;
                f[k] = Element(f[k].index() + 1);
            }
            HomSearchOptions opts;
            opts.ops = {true, true, false, false};
            opts.fixed = {{M.label(M.zero()), zero2}};
            std::vector<ElementMap> searched;
            search_homomorphisms(a, b, opts, [&](const ElementMap& g) {
                searched.push_back(g);
                return true;
            });
            std::sort(scanned.begin(), scanned.end());
            std::sort(searched.begin(), searched.end());
            if (scanned != searched)
                tally.violations.push_back("pair " + std::to_string(i) + "," + std::to_string(j) + ": search disagrees with scan");
        }
    return tally;
}

}  // namespace bqt::test

#endif
