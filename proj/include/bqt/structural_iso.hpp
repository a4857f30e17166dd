#ifndef BQT_STRUCTURAL_ISO_HPP
#define BQT_STRUCTURAL_ISO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alexander.hpp"
#include "module.hpp"
#include "module_iso.hpp"
#include "table.hpp"

namespace bqt {

/// Isomorphism data for Alexander biquandles: h on (1-st)M, k on the transversal A, and
/// the assembled bijection f(a + w) = k(a) + h(w) on table labels.
struct IsoWitness {
    ModuleIso h;
    ModuleMap k;
    ElementMap f;
};

struct StructuralStats {
    std::uint64_t module_isos = 0;     // h candidates tried
    std::uint64_t k_nodes = 0;         // k(alpha) values tried
    std::uint64_t prune_coset = 0;     // k(alpha) in a coset already used
    std::uint64_t prune_closure = 0;   // s'k(alpha) != k(beta) + h(w)
    std::uint64_t verify_failed = 0;   // assembled f rejected by the table check
};

/// One instance of the orbit condition: s alpha = beta + omega with beta in A, omega in N,
/// compared as s'k(alpha) (lhs) against k(beta) + h(omega) (rhs).
struct ClosureCheck {
    ModuleElement alpha, beta, omega, lhs, rhs;
    bool holds() const noexcept { return lhs == rhs; }
};

/// Decides isomorphism of the Alexander biquandles of M and M' through the module data:
/// a module isomorphism h: (1-st)M -> (1-st)M' and images k(alpha) of coset
/// representatives with k(0) = 0, (1-s't')k(alpha) = h((1-st)alpha), pairwise distinct
/// cosets, and s'k(alpha) = k(beta) + h(omega) whenever s alpha = beta + omega.
class StructuralSearch {
   public:
    StructuralSearch(FiniteModule source, FiniteModule target)
        : M_(std::move(source)),
          M2_(std::move(target)),
          N_(one_minus_st_submodule(M_)),
          N2_(one_minus_st_submodule(M2_)),
          A_(transversal(M_, N_)),
          A2_(transversal(M2_, N2_)) {
        for (auto alpha : A_.reps) shifted_.push_back(A_.decompose(M_, M_.s(alpha)));
    }

    const FiniteModule& source() const noexcept { return M_; }
    const FiniteModule& target() const noexcept { return M2_; }
    const Submodule& source_image() const noexcept { return N_; }
    const Submodule& target_image() const noexcept { return N2_; }
    const Transversal& source_transversal() const noexcept { return A_; }
    const Transversal& target_transversal() const noexcept { return A2_; }

    /// All y in M' with (1-s't')y = h((1-st)alpha), in code order.
    std::vector<ModuleElement> k_candidates(ModuleElement alpha, const ModuleMap& h) const {
        auto wanted = h(M_.one_minus_st(alpha));
        std::vector<ModuleElement> out;
        for (auto y : M2_.elements())
            if (M2_.one_minus_st(y) == wanted) out.push_back(y);
        return out;
    }

    /// Orbit condition for alpha; k must be defined at alpha and at the representative beta of s alpha.
    ClosureCheck closure(ModuleElement alpha, const ModuleMap& k, const ModuleMap& h) const {
        auto [beta, omega] = A_.decompose(M_, M_.s(alpha));
        return {alpha, beta, omega, M2_.s(k(alpha)), M2_.add(k(beta), h(omega))};
    }

    /// f(alpha + omega) = k(alpha) + h(omega).
    ElementMap assemble(const ModuleMap& h, const ModuleMap& k) const {
        ElementMap f(M_.size());
        for (auto x : M_.elements()) {
            auto [alpha, omega] = A_.decompose(M_, x);
            f[M_.label(x).zero_based()] = M2_.label(M2_.add(k(alpha), h(omega)));
        }
        return f;
    }

    std::optional<IsoWitness> run(StructuralStats* stats = nullptr) {
        StructuralStats local;
        stats_ = stats ? stats : &local;
        std::optional<IsoWitness> found;
        if (M_.size() != M2_.size() || N_.size() != N2_.size()) return found;
        for_each_module_isomorphism(M_, N_, M2_, N2_, [&](const ModuleIso& h) {
            ++stats_->module_isos;
            ModuleMap k(M_.size());
            std::vector<bool> coset_used(A2_.reps.size(), false);
            found = extend_k(h, k, coset_used, 0);
            return !found.has_value();
        });
        stats_ = nullptr;
        return found;
    }

   private:
    bool closures_hold(const ModuleMap& k, const ModuleMap& h) const {
        for (std::size_t i = 0; i < A_.reps.size(); ++i) {
            auto alpha = A_.reps[i];
            const auto& [beta, omega] = shifted_[i];
            if (!k.contains(alpha) || !k.contains(beta)) continue;
            if (M2_.s(k(alpha)) != M2_.add(k(beta), h(omega))) return false;
        }
        return true;
    }

    std::optional<IsoWitness> extend_k(const ModuleIso& h, ModuleMap& k, std::vector<bool>& coset_used, std::size_t i) {
        if (i == A_.reps.size()) {
            auto f = assemble(h, k);
            if (!tables_) tables_.emplace(make_alexander(M_), make_alexander(M2_));
            if (!is_isomorphism(tables_->first, tables_->second, f)) {
                ++stats_->verify_failed;
                return std::nullopt;
            }
            return IsoWitness{h, k, std::move(f)};
        }
        auto alpha = A_.reps[i];
        std::vector<ModuleElement> candidates =
            alpha.is_zero() ? std::vector<ModuleElement>{M2_.zero()} : k_candidates(alpha, h);
        for (auto y : candidates) {
            ++stats_->k_nodes;
            auto coset = A2_.coset_index[y.code()];
            if (coset_used[coset]) {
                ++stats_->prune_coset;
                continue;
            }
            k.set(alpha, y);
            if (closures_hold(k, h)) {
                coset_used[coset] = true;
                if (auto w = extend_k(h, k, coset_used, i + 1)) return w;
                coset_used[coset] = false;
            } else {
                ++stats_->prune_closure;
            }
            k.erase(alpha);
        }
        return std::nullopt;
    }

    FiniteModule M_, M2_;
    Submodule N_, N2_;
    Transversal A_, A2_;
    std::vector<std::pair<ModuleElement, ModuleElement>> shifted_;  // s alpha = beta + omega
    std::optional<std::pair<BiquandleTable, BiquandleTable>> tables_;
    StructuralStats* stats_ = nullptr;
};

inline std::optional<IsoWitness> structural_iso(const FiniteModule& M, const FiniteModule& M2,
                                                StructuralStats* stats = nullptr) {
    StructuralSearch search(M, M2);
    return search.run(stats);
}

/// Restricts a biquandle isomorphism (normalized to fix 0) to h on (1-st)M and k on A, and
/// checks every structural condition. Throws std::invalid_argument if f is not an
/// isomorphism and std::logic_error if a condition fails.
inline IsoWitness extract_witness(const FiniteModule& M, const FiniteModule& M2, const ElementMap& f) {
    auto fn = normalize_iso(M, M2, f);
    StructuralSearch s(M, M2);
    const auto& N = s.source_image();
    const auto& N2 = s.target_image();
    const auto& A = s.source_transversal();
    auto g = [&](ModuleElement x) { return M2.element_at(fn[M.label(x).zero_based()]); };

    IsoWitness w{ModuleIso(M.size()), ModuleMap(M.size()), fn};
    for (auto x : N.elements()) w.h.set(x, g(x));
    for (auto alpha : A.reps) w.k.set(alpha, g(alpha));

    if (!is_module_isomorphism(M, N, M2, N2, w.h)) throw std::logic_error("restriction to (1-st)M is not a module isomorphism");
    std::vector<bool> coset_hit(s.target_transversal().reps.size(), false);
    for (auto alpha : A.reps) {
        if (M2.one_minus_st(w.k(alpha)) != w.h(M.one_minus_st(alpha)))
            throw std::logic_error("(1-st)g(alpha) != h((1-st)alpha)");
        auto coset = s.target_transversal().coset_index[w.k(alpha).code()];
        if (coset_hit[coset]) throw std::logic_error("g(A) is not a transversal");
        coset_hit[coset] = true;
    }
    std::vector<bool> in_orbit(M.size(), false);
    for (auto x : A.orbit) in_orbit[x.code()] = true;
    for (auto alpha : A.reps)
        for (auto omega : N.elements()) {
            auto x = M.add(M.s(alpha), omega);
            if (in_orbit[x.code()] && g(x) != M2.add(M2.s(g(alpha)), w.h(omega)))
                throw std::logic_error("g(s alpha + omega) != s g(alpha) + h(omega)");
        }
    if (s.assemble(w.h, w.k) != fn) throw std::logic_error("reassembled map differs from f");
    return w;
}

}  // namespace bqt

#endif
