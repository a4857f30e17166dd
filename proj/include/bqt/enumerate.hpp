#ifndef BQT_ENUMERATE_HPP
#define BQT_ENUMERATE_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "axioms.hpp"
#include "brute_iso.hpp"
#include "table.hpp"

namespace bqt {

struct EnumerationResult {
    std::vector<BiquandleTable> tables;
    std::vector<std::vector<std::size_t>> classes;  // indices into tables, one list per isomorphism class
};

namespace detail {

class BiquandleEnumerator {
   public:
    explicit BiquandleEnumerator(std::size_t n) : n_(n) {
        std::vector<std::uint32_t> p(n);
        std::iota(p.begin(), p.end(), 0u);
        do perms_.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        up_.assign(n * n, unknown);
        down_.assign(n * n, unknown);
    }

    std::vector<BiquandleTable> run() {
        place(0);
        return std::move(found_);
    }

   private:
    static constexpr std::uint32_t unknown = UINT32_MAX;

    // Columns are filled in the order up_0, down_0, up_1, down_1, ...
    void place(std::size_t slot) {
        if (slot == 2 * n_) {
            finish();
            return;
        }
        auto& block = slot % 2 == 0 ? up_ : down_;
        std::size_t col = slot / 2;
        for (const auto& p : perms_) {
            for (std::size_t a = 0; a < n_; ++a) block[a * n_ + col] = p[a];
            if (consistent()) place(slot + 1);
        }
        for (std::size_t a = 0; a < n_; ++a) block[a * n_ + col] = unknown;
    }

    std::uint32_t up(std::uint32_t a, std::uint32_t b) const {
        return a == unknown || b == unknown ? unknown : up_[a * n_ + b];
    }
    std::uint32_t dn(std::uint32_t a, std::uint32_t b) const {
        return a == unknown || b == unknown ? unknown : down_[a * n_ + b];
    }

    // Axiom 3 (i)-(iii) on every triple whose cells are known, and injectivity of the
    // switch on known pairs.
    bool consistent() const {
        const auto n = static_cast<std::uint32_t>(n_);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b)
                for (std::uint32_t c = 0; c < n; ++c) {
                    auto l1 = up(up(a, b), c), r1 = up(up(a, dn(c, b)), up(b, c));
                    if (l1 != unknown && r1 != unknown && l1 != r1) return false;
                    auto l2 = dn(dn(c, b), a), r2 = dn(dn(c, up(a, b)), dn(b, a));
                    if (l2 != unknown && r2 != unknown && l2 != r2) return false;
                    auto l3 = up(dn(b, a), dn(c, up(a, b))), r3 = dn(up(b, c), up(a, dn(c, b)));
                    if (l3 != unknown && r3 != unknown && l3 != r3) return false;
                }
        std::vector<bool> hit(n_ * n_, false);
        for (std::uint32_t a = 0; a < n; ++a)
            for (std::uint32_t b = 0; b < n; ++b) {
                auto l = dn(b, a), r = up(a, b);
                if (l == unknown || r == unknown) continue;
                if (hit[l * n_ + r]) return false;
                hit[l * n_ + r] = true;
            }
        return true;
    }

    void finish() {
        const std::size_t n = n_;
        std::vector<std::uint32_t> upbar(n * n), downbar(n * n);
        // Barred operations come from the inverse switch (axiom 1).
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto b_prime = down_[b * n + a], a_prime = up_[a * n + b];
                upbar[a_prime * n + b_prime] = static_cast<std::uint32_t>(a);
                downbar[b_prime * n + a_prime] = static_cast<std::uint32_t>(b);
            }
        BiquandleTable t(n, {up_, down_, upbar, downbar});
        if (verify_biquandle(t).passed) found_.push_back(std::move(t));
    }

    std::size_t n_;
    std::vector<std::vector<std::uint32_t>> perms_;
    std::vector<std::uint32_t> up_, down_;
    std::vector<BiquandleTable> found_;
};

}  // namespace detail

/// All biquandles of order n, with their isomorphism classes. Orders above 3 are refused
/// unless allow_order_four is set (order 4 is the largest accepted).
inline EnumerationResult enumerate_biquandles(std::size_t n, bool allow_order_four = false) {
    if (n == 0) throw std::invalid_argument("order must be positive");
    if (n > 4 || (n == 4 && !allow_order_four))
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds the enumeration budget");

    EnumerationResult result;
    result.tables = detail::BiquandleEnumerator(n).run();
    std::sort(result.tables.begin(), result.tables.end(), [](const BiquandleTable& x, const BiquandleTable& y) {
        for (Op op : all_ops)
            if (x.block(op) != y.block(op)) return x.block(op) < y.block(op);
        return false;
    });

    std::vector<bool> placed(result.tables.size(), false);
    for (std::size_t i = 0; i < result.tables.size(); ++i) {
        if (placed[i]) continue;
        std::vector<std::size_t> cls{i};
        placed[i] = true;
        for (std::size_t j = i + 1; j < result.tables.size(); ++j)
            if (!placed[j] && brute_force_iso(result.tables[i], result.tables[j]).witness) {
                cls.push_back(j);
                placed[j] = true;
            }
        result.classes.push_back(std::move(cls));
    }
    return result;
}

}  // namespace bqt

#endif
