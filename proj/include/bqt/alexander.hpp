#ifndef BQT_ALEXANDER_HPP
#define BQT_ALEXANDER_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "axioms.hpp"
#include "module.hpp"
#include "table.hpp"

namespace bqt {

/// Explicit labelling of module elements: order[i] receives label x_{i+1}.
using ElementOrder = std::vector<ModuleElement>;

inline ElementOrder canonical_order(const FiniteModule& module) {
    ElementOrder order(module.size());
    for (std::size_t i = 0; i < module.size(); ++i) order[i] = module.element_at(Element(i + 1));
    return order;
}

namespace detail {

inline std::vector<std::uint32_t> position_of(const FiniteModule& module, const ElementOrder& order) {
    if (order.size() != module.size()) throw std::invalid_argument("element order must list every element once");
    std::vector<std::uint32_t> pos(module.size(), UINT32_MAX);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto c = order[i].code();
        if (c >= module.size() || pos[c] != UINT32_MAX)
            throw std::invalid_argument("element order must list every element once");
        pos[c] = static_cast<std::uint32_t>(i);
    }
    return pos;
}

using BinaryModuleOp = std::function<ModuleElement(ModuleElement, ModuleElement)>;

inline BiquandleTable tabulate_ops(const FiniteModule& module, const ElementOrder& order,
                                   const std::array<BinaryModuleOp, 4>& ops) {
    const auto pos = position_of(module, order);
    const std::size_t n = module.size();
    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (std::size_t o = 0; o < 4; ++o) {
        blocks[o].resize(n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) blocks[o][i * n + j] = pos[ops[o](order[i], order[j]).code()];
    }
    return BiquandleTable(n, std::move(blocks));
}

}  // namespace detail

/// Alexander biquandle on M: x^y = tx + (1-st)y, x_y = sx,
/// x^{\bar y} = t^{-1}x + (1 - s^{-1}t^{-1})y, x_{\bar y} = s^{-1}x.
inline BiquandleTable make_alexander(const FiniteModule& M, const ElementOrder& order) {
    auto up = [&](ModuleElement x, ModuleElement y) { return M.add(M.t(x), M.one_minus_st(y)); };
    auto down = [&](ModuleElement x, ModuleElement) { return M.s(x); };
    auto upbar = [&](ModuleElement x, ModuleElement y) {
        auto sinv_tinv_y = M.s_inv(M.t_inv(y));
        return M.add(M.t_inv(x), M.sub(y, sinv_tinv_y));
    };
    auto downbar = [&](ModuleElement x, ModuleElement) { return M.s_inv(x); };
    return detail::tabulate_ops(M, order, {up, down, upbar, downbar});
}

inline BiquandleTable make_alexander(const FiniteModule& M) { return make_alexander(M, canonical_order(M)); }

struct SwitchBiquandle {
    BiquandleTable table;
    IntMatrix c;  // A^{-1}B^{-1}A(I - A)
    IntMatrix d;  // I - A^{-1}B^{-1}AB
    bool switch_condition = false;  // [B, (A - I)(A, B)] = 0
    AxiomReport report;
};

/// Module switch: x^y = Cx + Dy + shift, x_y = Ay + Bx + shift. The barred operations
/// are read off the inverse of S(a,b) = (b_a, a^b). Throws if A, B or S is not invertible.
inline SwitchBiquandle make_switch_biquandle(const FiniteModule& carrier, const IntMatrix& a, const IntMatrix& b,
                                             ModuleElement shift, const ElementOrder& order) {
    const long long m = carrier.modulus();
    const std::size_t k = carrier.rank();
    if (a.dim() != k || b.dim() != k) throw std::invalid_argument("switch matrices must be k x k");
    auto a_inv = mat_inverse(a.reduced(m), m);
    if (!a_inv) throw std::invalid_argument("A is not invertible mod " + std::to_string(m));
    auto b_inv = mat_inverse(b.reduced(m), m);
    if (!b_inv) throw std::invalid_argument("B is not invertible mod " + std::to_string(m));

    const auto id = IntMatrix::identity(k);
    const auto ar = a.reduced(m), br = b.reduced(m);
    const auto ab_inv = mat_mul(*a_inv, *b_inv, m);
    SwitchBiquandle out;
    out.c = mat_mul(mat_mul(ab_inv, ar, m), mat_sub(id, ar, m), m);
    out.d = mat_sub(id, mat_mul(mat_mul(ab_inv, ar, m), br, m), m);
    const auto group_comm = mat_mul(mat_mul(ab_inv, ar, m), br, m);  // (A,B)
    const auto x = mat_mul(mat_sub(ar, id, m), group_comm, m);
    out.switch_condition = mat_mul(br, x, m) == mat_mul(x, br, m);

    const std::size_t n = carrier.size();
    const auto pos = detail::position_of(carrier, order);
    auto up = [&](ModuleElement p, ModuleElement q) {
        return carrier.add(carrier.add(carrier.apply(out.c, p), carrier.apply(out.d, q)), shift);
    };
    auto down = [&](ModuleElement p, ModuleElement q) {
        return carrier.add(carrier.add(carrier.apply(ar, q), carrier.apply(br, p)), shift);
    };

    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (auto& blk : blocks) blk.assign(n * n, UINT32_MAX);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            blocks[0][i * n + j] = pos[up(order[i], order[j]).code()];
            blocks[1][i * n + j] = pos[down(order[i], order[j]).code()];
        }
    // S(a, b) = (b_a, a^b) = (b', a');  then a = a'^{\bar b'} and b = b'_{\bar a'}.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::uint32_t b_prime = blocks[1][j * n + i];
            std::uint32_t a_prime = blocks[0][i * n + j];
            auto& ub = blocks[2][a_prime * n + b_prime];
            auto& db = blocks[3][b_prime * n + a_prime];
            if (ub != UINT32_MAX || db != UINT32_MAX) throw std::invalid_argument("switch is not invertible");
            ub = static_cast<std::uint32_t>(i);
            db = static_cast<std::uint32_t>(j);
        }
    out.table = BiquandleTable(n, std::move(blocks));
    out.report = verify_biquandle(out.table);
    return out;
}

inline SwitchBiquandle make_switch_biquandle(const FiniteModule& carrier, const IntMatrix& a, const IntMatrix& b,
                                             ModuleElement shift) {
    return make_switch_biquandle(carrier, a, b, shift, canonical_order(carrier));
}

/// Z_m^k as a bare abelian group, for switch carriers (the s, t actions are unused).
inline FiniteModule plain_module(long long m, std::size_t k) {
    return FiniteModule(m, k, IntMatrix::identity(k), IntMatrix::identity(k));
}

/// A subset of a module closed under +, -, s and t; elements kept in code order.
class Submodule {
   public:
    Submodule() = default;
    Submodule(std::size_t ambient_size, std::vector<ModuleElement> elements)
        : elements_(std::move(elements)), member_(ambient_size, false) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        for (auto e : elements_) member_.at(e.code()) = true;
    }

    const std::vector<ModuleElement>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(ModuleElement x) const { return x.code() < member_.size() && member_[x.code()]; }

    friend bool operator==(const Submodule& a, const Submodule& b) { return a.elements_ == b.elements_; }

   private:
    std::vector<ModuleElement> elements_;
    std::vector<bool> member_;
};

/// Smallest submodule containing the generators (and 0).
inline Submodule generated_submodule(const FiniteModule& M, const std::vector<ModuleElement>& generators) {
    std::vector<bool> in(M.size(), false);
    std::vector<ModuleElement> members{M.zero()};
    in[0] = true;
    std::vector<ModuleElement> frontier;
    auto push = [&](ModuleElement x) {
        if (!in[x.code()]) {
            in[x.code()] = true;
            members.push_back(x);
            frontier.push_back(x);
        }
    };
    for (auto g : generators) push(g);
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        push(M.s(x));
        push(M.t(x));
        // Snapshot: sums with members added later are reached from the other side.
        for (std::size_t i = 0, end = members.size(); i < end; ++i) push(M.add(x, members[i]));
    }
    return Submodule(M.size(), std::move(members));
}

inline bool is_submodule(const FiniteModule& M, const Submodule& N) {
    if (!N.contains(M.zero())) return false;
    for (auto x : N.elements()) {
        if (!N.contains(M.neg(x)) || !N.contains(M.s(x)) || !N.contains(M.t(x)) || !N.contains(M.s_inv(x)) ||
            !N.contains(M.t_inv(x)))
            return false;
        for (auto y : N.elements())
            if (!N.contains(M.add(x, y))) return false;
    }
    return true;
}

/// (1 - st)M, the image of x -> (I - ST)x.
inline Submodule one_minus_st_submodule(const FiniteModule& M) {
    std::vector<ModuleElement> image;
    for (auto x : M.elements()) image.push_back(M.one_minus_st(x));
    return Submodule(M.size(), std::move(image));
}

/// Ker(1 - s).
inline Submodule kernel_one_minus_s(const FiniteModule& M) {
    std::vector<ModuleElement> kernel;
    for (auto x : M.elements())
        if (M.one_minus_s(x).is_zero()) kernel.push_back(x);
    return Submodule(M.size(), std::move(kernel));
}

/// Closure of X under multiplication by s and s^{-1}, in code order.
inline std::vector<ModuleElement> s_orbit(const FiniteModule& M, const std::vector<ModuleElement>& seed) {
    if (seed.empty()) throw std::invalid_argument("s_orbit needs a nonempty set");
    std::vector<bool> in(M.size(), false);
    std::vector<ModuleElement> out;
    for (auto x : seed) {
        auto y = x;
        while (!in[y.code()]) {
            in[y.code()] = true;
            out.push_back(y);
            y = M.s(y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Coset representatives of M/N, zero representing N itself, plus O_s of the representatives.
struct Transversal {
    std::vector<ModuleElement> reps;         // reps[0] is zero; others in code order
    std::vector<ModuleElement> orbit;        // O_s(reps)
    std::vector<std::uint32_t> coset_index;  // code -> position in reps

    /// x = reps[i] + w with w in N.
    std::pair<ModuleElement, ModuleElement> decompose(const FiniteModule& M, ModuleElement x) const {
        auto rep = reps[coset_index[x.code()]];
        return {rep, M.sub(x, rep)};
    }
};

/// Deterministic transversal: each coset is represented by its first element in code order,
/// which makes 0 the representative of N.
inline Transversal transversal(const FiniteModule& M, const Submodule& N) {
    Transversal tr;
    tr.coset_index.assign(M.size(), UINT32_MAX);
    for (auto x : M.elements()) {
        if (tr.coset_index[x.code()] != UINT32_MAX) continue;
        auto id = static_cast<std::uint32_t>(tr.reps.size());
        tr.reps.push_back(x);
        for (auto w : N.elements()) tr.coset_index[M.add(x, w).code()] = id;
    }
    tr.orbit = s_orbit(M, tr.reps);
    return tr;
}

/// g_z(x) = x + z, as a map on table labels.
inline ElementMap translation_map(const FiniteModule& M, ModuleElement z) {
    ElementMap f(M.size());
    for (auto x : M.elements()) f[M.label(x).zero_based()] = M.label(M.add(x, z));
    return f;
}

/// Composes an isomorphism of Alexander tables with g_{-f(0)} so that the result fixes 0.
inline ElementMap normalize_iso(const FiniteModule& M, const FiniteModule& M2, const ElementMap& f) {
    if (!is_isomorphism(make_alexander(M), make_alexander(M2), f))
        throw std::invalid_argument("normalize_iso needs a biquandle isomorphism");
    auto f0 = M2.element_at(f[M.label(M.zero()).zero_based()]);
    auto shift = translation_map(M2, M2.neg(f0));
    ElementMap out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = shift[f[i].zero_based()];
    return out;
}

}  // namespace bqt

#endif
