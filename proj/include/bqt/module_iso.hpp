#ifndef BQT_MODULE_ISO_HPP
#define BQT_MODULE_ISO_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alexander.hpp"
#include "module.hpp"

namespace bqt {

/// Partial map between two finite modules, stored densely by source code.
class ModuleMap {
   public:
    static constexpr std::uint32_t undefined = UINT32_MAX;

    ModuleMap() = default;
    explicit ModuleMap(std::size_t source_size) : image_(source_size, undefined) {}

    bool contains(ModuleElement x) const { return x.code() < image_.size() && image_[x.code()] != undefined; }
    ModuleElement operator()(ModuleElement x) const {
        if (!contains(x)) throw std::out_of_range("module map undefined at element");
        return ModuleElement(image_[x.code()]);
    }
    void set(ModuleElement x, ModuleElement y) { image_.at(x.code()) = y.code(); }
    void erase(ModuleElement x) { image_.at(x.code()) = undefined; }

    /// Defined pairs in code order of the source.
    std::vector<std::pair<ModuleElement, ModuleElement>> pairs() const {
        std::vector<std::pair<ModuleElement, ModuleElement>> out;
        for (std::size_t c = 0; c < image_.size(); ++c)
            if (image_[c] != undefined)
                out.emplace_back(ModuleElement(static_cast<std::uint32_t>(c)), ModuleElement(image_[c]));
        return out;
    }

    friend bool operator==(const ModuleMap&, const ModuleMap&) = default;
    friend auto operator<=>(const ModuleMap& a, const ModuleMap& b) { return a.image_ <=> b.image_; }

   private:
    std::vector<std::uint32_t> image_;
};

/// A module isomorphism h: N -> N' intertwining the actions of the ambient modules.
using ModuleIso = ModuleMap;

/// Independent re-check: h is defined exactly on N, lands bijectively on N', is additive
/// and satisfies h(Sx) = S'h(x), h(Tx) = T'h(x).
inline bool is_module_isomorphism(const FiniteModule& M, const Submodule& N, const FiniteModule& M2,
                                  const Submodule& N2, const ModuleMap& h) {
    if (N.size() != N2.size()) return false;
    std::vector<bool> hit(M2.size(), false);
    for (auto x : N.elements()) {
        if (!h.contains(x)) return false;
        auto y = h(x);
        if (!N2.contains(y) || hit[y.code()]) return false;
        hit[y.code()] = true;
    }
    for (auto [x, y] : h.pairs())
        if (!N.contains(x)) return false;
    for (auto x : N.elements()) {
        if (h(M.s(x)) != M2.s(h(x)) || h(M.t(x)) != M2.t(h(x))) return false;
        for (auto y : N.elements())
            if (h(M.add(x, y)) != M2.add(h(x), h(y))) return false;
    }
    return true;
}

/// Greedy generating set of N as a module: each generator is the first element (in code
/// order) not yet reached by the previous ones.
inline std::vector<ModuleElement> module_generators(const FiniteModule& M, const Submodule& N) {
    std::vector<ModuleElement> gens;
    Submodule reached = generated_submodule(M, gens);
    for (auto x : N.elements()) {
        if (reached.contains(x)) continue;
        gens.push_back(x);
        reached = generated_submodule(M, gens);
    }
    return gens;
}

namespace detail {

// Extends generator images to the whole submodule they generate, enforcing additivity and
// the s, t intertwining along the way. Returns false on any conflict.
inline bool extend_module_map(const FiniteModule& M, const FiniteModule& M2, const std::vector<ModuleElement>& gens,
                              const std::vector<ModuleElement>& images, ModuleMap& h) {
    std::vector<ModuleElement> domain;
    std::vector<ModuleElement> queue;
    auto assign = [&](ModuleElement x, ModuleElement y) {
        if (h.contains(x)) return h(x) == y;
        h.set(x, y);
        domain.push_back(x);
        queue.push_back(x);
        return true;
    };
    if (!assign(M.zero(), M2.zero())) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (!assign(gens[i], images[i])) return false;
    std::size_t head = 0;
    while (head < queue.size()) {
        auto x = queue[head++];
        auto hx = h(x);
        if (!assign(M.s(x), M2.s(hx)) || !assign(M.t(x), M2.t(hx))) return false;
        for (std::size_t i = 0; i < domain.size(); ++i) {
            auto y = domain[i];
            if (!assign(M.add(x, y), M2.add(hx, h(y)))) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Visits every module isomorphism N -> N' in deterministic order (generator images in code
/// order). The visitor returns false to stop.
template <class Visitor>
void for_each_module_isomorphism(const FiniteModule& M, const Submodule& N, const FiniteModule& M2,
                                 const Submodule& N2, Visitor&& visit) {
    if (N.size() != N2.size()) return;
    const auto gens = module_generators(M, N);
    std::vector<ModuleElement> images(gens.size());
    const auto& targets = N2.elements();

    std::vector<std::size_t> choice(gens.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < gens.size(); ++i) images[i] = targets[choice[i]];
        ModuleMap h(M.size());
        if (detail::extend_module_map(M, M2, gens, images, h)) {
            bool injective = true;
            std::vector<bool> hit(M2.size(), false);
            for (auto x : N.elements()) {
                auto y = h(x);
                if (hit[y.code()]) {
                    injective = false;
                    break;
                }
                hit[y.code()] = true;
            }
            if (injective && !visit(static_cast<const ModuleIso&>(h))) return;
        }
        // odometer, last generator fastest
        std::size_t i = gens.size();
        while (i > 0) {
            --i;
            if (++choice[i] < targets.size()) break;
            choice[i] = 0;
            if (i == 0) return;
        }
        if (gens.empty()) return;
    }
}

inline std::vector<ModuleIso> module_isomorphisms(const FiniteModule& M, const Submodule& N, const FiniteModule& M2,
                                                  const Submodule& N2) {
    std::vector<ModuleIso> out;
    for_each_module_isomorphism(M, N, M2, N2, [&](const ModuleIso& h) {
        out.push_back(h);
        return true;
    });
    return out;
}

/// Reference enumeration over all bijections N -> N'; only for |N| <= 8.
inline std::vector<ModuleIso> module_isomorphisms_by_scan(const FiniteModule& M, const Submodule& N,
                                                          const FiniteModule& M2, const Submodule& N2) {
    if (N.size() > 8) throw std::invalid_argument("bijection scan limited to submodules of size <= 8");
    std::vector<ModuleIso> out;
    if (N.size() != N2.size()) return out;
    auto targets = N2.elements();
    do {
        ModuleMap h(M.size());
        for (std::size_t i = 0; i < N.size(); ++i) h.set(N.elements()[i], targets[i]);
        if (is_module_isomorphism(M, N, M2, N2, h)) out.push_back(std::move(h));
    } while (std::next_permutation(targets.begin(), targets.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bqt

#endif
