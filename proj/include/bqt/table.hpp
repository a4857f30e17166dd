#ifndef BQT_TABLE_HPP
#define BQT_TABLE_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bqt {

/// The four biquandle operations. Names follow the matrix blocks:
/// up = a^b (B^1), down = a_b (B^2), upbar = a^{\bar b} (B^3), downbar = a_{\bar b} (B^4).
enum class Op : std::uint8_t { up = 0, down = 1, upbar = 2, downbar = 3 };

inline constexpr std::array<Op, 4> all_ops{Op::up, Op::down, Op::upbar, Op::downbar};

constexpr std::string_view op_name(Op op) noexcept {
    switch (op) {
        case Op::up: return "up";
        case Op::down: return "down";
        case Op::upbar: return "upbar";
        case Op::downbar: return "downbar";
    }
    return "?";
}

/// 1-based element label x_k of a finite biquandle.
class Element {
   public:
    constexpr Element() noexcept = default;
    constexpr explicit Element(std::size_t index) noexcept : index_(static_cast<std::uint32_t>(index)) {}

    constexpr std::size_t index() const noexcept { return index_; }
    constexpr std::size_t zero_based() const noexcept { return index_ - 1; }

    friend constexpr auto operator<=>(Element, Element) noexcept = default;

   private:
    std::uint32_t index_ = 0;
};

/// A map between element sets; image of element i is stored at position i-1.
using ElementMap = std::vector<Element>;

/// Order n plus the four n x n operation tables of a candidate biquandle.
/// Entries are range checked on construction; the axioms are not (see verify_biquandle).
class BiquandleTable {
   public:
    BiquandleTable() = default;

    /// Blocks are row-major, zero-based entries (value v means x_{v+1}).
    BiquandleTable(std::size_t n, std::array<std::vector<std::uint32_t>, 4> blocks) : n_(n), cells_(std::move(blocks)) {
        if (n == 0) throw std::invalid_argument("biquandle order must be positive");
        for (const auto& block : cells_) {
            if (block.size() != n * n) throw std::invalid_argument("operation table has wrong size");
            for (auto v : block)
                if (v >= n) throw std::out_of_range("operation table entry out of range");
        }
    }

    std::size_t order() const noexcept { return n_; }

    Element operator()(Op op, Element a, Element b) const {
        check(a);
        check(b);
        return Element(raw(op, a.zero_based(), b.zero_based()) + 1);
    }
    Element up(Element a, Element b) const { return (*this)(Op::up, a, b); }
    Element down(Element a, Element b) const { return (*this)(Op::down, a, b); }
    Element upbar(Element a, Element b) const { return (*this)(Op::upbar, a, b); }
    Element downbar(Element a, Element b) const { return (*this)(Op::downbar, a, b); }

    /// Zero-based unchecked access for inner loops.
    std::uint32_t raw(Op op, std::size_t a, std::size_t b) const noexcept {
        return cells_[static_cast<std::size_t>(op)][a * n_ + b];
    }
    const std::vector<std::uint32_t>& block(Op op) const noexcept { return cells_[static_cast<std::size_t>(op)]; }

    friend bool operator==(const BiquandleTable&, const BiquandleTable&) = default;

   private:
    void check(Element e) const {
        if (e.index() < 1 || e.index() > n_)
            throw std::out_of_range("element x_" + std::to_string(e.index()) + " not in table of order " +
                                    std::to_string(n_));
    }

    std::size_t n_ = 0;
    std::array<std::vector<std::uint32_t>, 4> cells_;
};

/// Op-table accessor; throws std::out_of_range for labels outside 1..n.
inline Element op_lookup(const BiquandleTable& table, Op op, Element a, Element b) { return table(op, a, b); }

/// i^j = i_j = i^{\bar j} = i_{\bar j} = i.
inline BiquandleTable trivial_biquandle(std::size_t n) {
    if (n == 0) throw std::invalid_argument("trivial biquandle needs n >= 1");
    std::vector<std::uint32_t> block(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) block[i * n + j] = static_cast<std::uint32_t>(i);
    return BiquandleTable(n, {block, block, block, block});
}

inline ElementMap identity_map(std::size_t n) {
    ElementMap f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = Element(i + 1);
    return f;
}

inline bool is_bijection(const ElementMap& f, std::size_t target_order) {
    if (f.size() != target_order) return false;
    std::vector<bool> seen(target_order, false);
    for (auto e : f) {
        if (e.index() < 1 || e.index() > target_order || seen[e.zero_based()]) return false;
        seen[e.zero_based()] = true;
    }
    return true;
}

inline ElementMap inverse_map(const ElementMap& f) {
    if (!is_bijection(f, f.size())) throw std::invalid_argument("map is not a bijection");
    ElementMap inv(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) inv[f[i].zero_based()] = Element(i + 1);
    return inv;
}

/// True iff f preserves all four operations: f(op(x,y)) = op'(f(x), f(y)).
inline bool is_homomorphism(const BiquandleTable& src, const BiquandleTable& dst, const ElementMap& f) {
    const std::size_t n = src.order();
    if (f.size() != n) throw std::invalid_argument("map must be total on the source table");
    for (auto e : f)
        if (e.index() < 1 || e.index() > dst.order()) throw std::out_of_range("map value outside target table");
    for (Op op : all_ops)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                auto lhs = f[src.raw(op, x, y)].zero_based();
                auto rhs = dst.raw(op, f[x].zero_based(), f[y].zero_based());
                if (lhs != rhs) return false;
            }
    return true;
}

inline bool is_isomorphism(const BiquandleTable& src, const BiquandleTable& dst, const ElementMap& f) {
    return src.order() == dst.order() && is_bijection(f, dst.order()) && is_homomorphism(src, dst, f);
}

}  // namespace bqt

#endif
