#ifndef BQT_BRUTE_ISO_HPP
#define BQT_BRUTE_ISO_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "axioms.hpp"
#include "table.hpp"

namespace bqt {

struct SearchStats {
    std::uint64_t nodes = 0;               // branching decisions
    std::uint64_t propagations = 0;        // forced assignments
    std::uint64_t prune_injectivity = 0;   // image already used
    std::uint64_t prune_operation = 0;     // operation equation contradicted
    std::uint64_t prune_signature = 0;     // element invariants differ
    std::uint64_t solutions = 0;

    std::uint64_t prunes() const noexcept { return prune_injectivity + prune_operation + prune_signature; }
};

/// Isomorphism-invariant fingerprint of one element: idempotence flags and fixed-point counts
/// of the four column and row maps.
using ElementSignature = std::array<std::uint32_t, 12>;

inline std::vector<ElementSignature> element_signatures(const BiquandleTable& t) {
    const std::size_t n = t.order();
    std::vector<ElementSignature> sig(n);
    for (std::size_t a = 0; a < n; ++a) {
        auto& s = sig[a];
        s.fill(0);
        for (std::size_t o = 0; o < 4; ++o) {
            Op op = all_ops[o];
            s[o] = t.raw(op, a, a) == a;
            for (std::size_t b = 0; b < n; ++b) {
                s[4 + o] += t.raw(op, b, a) == b;
                s[8 + o] += t.raw(op, a, b) == a;
            }
        }
    }
    return sig;
}

/// Sorted multiset of element signatures; equal for isomorphic tables.
inline std::vector<ElementSignature> degree_profile(const BiquandleTable& t) {
    auto sig = element_signatures(t);
    std::sort(sig.begin(), sig.end());
    return sig;
}

struct HomSearchOptions {
    bool injective = false;
    /// Operations that must be preserved, indexed by Op.
    std::array<bool, 4> ops{true, true, true, true};
    /// Pre-assigned values f(x) = y.
    std::vector<std::pair<Element, Element>> fixed;
};

namespace detail {

class HomSearch {
   public:
    HomSearch(const BiquandleTable& src, const BiquandleTable& dst, const HomSearchOptions& opts, SearchStats& stats)
        : src_(src), dst_(dst), opts_(opts), stats_(stats), n_(src.order()), m_(dst.order()), f_(n_, unset), used_(m_, 0) {
        if (opts.injective && n_ == m_) {
            src_sig_ = element_signatures(src);
            dst_sig_ = element_signatures(dst);
        }
    }

    template <class Visitor>
    void run(Visitor& visit) {
        for (auto [x, y] : opts_.fixed) {
            if (x.index() < 1 || x.index() > n_ || y.index() < 1 || y.index() > m_)
                throw std::out_of_range("fixed assignment outside tables");
            if (!assign(x.zero_based(), y.zero_based()) || !propagate()) return;
        }
        recurse(visit);
    }

   private:
    static constexpr std::uint32_t unset = UINT32_MAX;

    bool allowed(std::size_t x, std::size_t y) const {
        if (opts_.injective && used_[y]) return false;
        if (!src_sig_.empty() && src_sig_[x] != dst_sig_[y]) return false;
        return true;
    }

    bool assign(std::size_t x, std::size_t y) {
        if (f_[x] != unset) {
            if (f_[x] == y) return true;
            ++stats_.prune_operation;
            return false;
        }
        if (opts_.injective && used_[y]) {
            ++stats_.prune_injectivity;
            return false;
        }
        if (!src_sig_.empty() && src_sig_[x] != dst_sig_[y]) {
            ++stats_.prune_signature;
            return false;
        }
        f_[x] = static_cast<std::uint32_t>(y);
        ++used_[y];
        trail_.push_back(x);
        return true;
    }

    bool propagate() {
        while (queue_head_ < trail_.size()) {
            std::size_t x = trail_[queue_head_++];
            std::size_t fx = f_[x];
            for (std::size_t i = 0; i < trail_.size(); ++i) {
                std::size_t z = trail_[i];
                std::size_t fz = f_[z];
                for (Op op : all_ops) {
                    if (!opts_.ops[static_cast<std::size_t>(op)]) continue;
                    ++stats_.propagations;
                    if (!assign(src_.raw(op, x, z), dst_.raw(op, fx, fz))) return false;
                    if (!assign(src_.raw(op, z, x), dst_.raw(op, fz, fx))) return false;
                }
            }
        }
        return true;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            std::size_t x = trail_.back();
            trail_.pop_back();
            --used_[f_[x]];
            f_[x] = unset;
        }
        queue_head_ = std::min(queue_head_, mark);
    }

    // Returns false when the visitor asked to stop.
    template <class Visitor>
    bool recurse(Visitor& visit) {
        std::size_t best = n_, best_count = SIZE_MAX;
        for (std::size_t x = 0; x < n_; ++x) {
            if (f_[x] != unset) continue;
            std::size_t count = 0;
            for (std::size_t y = 0; y < m_; ++y) count += allowed(x, y);
            if (count < best_count) {
                best = x;
                best_count = count;
            }
        }
        if (best == n_) {
            ++stats_.solutions;
            ElementMap f(n_);
            for (std::size_t x = 0; x < n_; ++x) f[x] = Element(f_[x] + 1);
            return visit(static_cast<const ElementMap&>(f));
        }
        for (std::size_t y = 0; y < m_; ++y) {
            if (!allowed(best, y)) continue;
            ++stats_.nodes;
            std::size_t mark = trail_.size();
            if (assign(best, y) && propagate())
                if (!recurse(visit)) return false;
            undo(mark);
        }
        return true;
    }

    const BiquandleTable& src_;
    const BiquandleTable& dst_;
    const HomSearchOptions& opts_;
    SearchStats& stats_;
    std::size_t n_, m_;
    std::vector<std::uint32_t> f_;
    std::vector<std::uint32_t> used_;
    std::vector<std::size_t> trail_;
    std::size_t queue_head_ = 0;
    std::vector<ElementSignature> src_sig_, dst_sig_;
};

}  // namespace detail

/// Backtracking search for maps src -> dst preserving the selected operations. Each
/// assignment forces f(op(x, z)) for every assigned z, so branching happens only on
/// elements not yet determined; the most constrained such element is chosen next.
/// The visitor receives each solution and returns false to stop.
template <class Visitor>
void search_homomorphisms(const BiquandleTable& src, const BiquandleTable& dst, const HomSearchOptions& opts,
                          Visitor&& visit, SearchStats* stats = nullptr) {
    SearchStats local;
    SearchStats& s = stats ? *stats : local;
    if (opts.injective && src.order() > dst.order()) return;
    detail::HomSearch search(src, dst, opts, s);
    search.run(visit);
}

struct IsoSearchResult {
    std::optional<ElementMap> witness;
    SearchStats stats;
};

inline void require_biquandles(const BiquandleTable& a, const BiquandleTable& b) {
    if (!verify_biquandle(a).passed) throw std::invalid_argument("first table is not a biquandle");
    if (!verify_biquandle(b).passed) throw std::invalid_argument("second table is not a biquandle");
}

/// First isomorphism found by the search, or none.
inline IsoSearchResult brute_force_iso(const BiquandleTable& a, const BiquandleTable& b) {
    require_biquandles(a, b);
    IsoSearchResult result;
    if (a.order() != b.order() || degree_profile(a) != degree_profile(b)) return result;
    HomSearchOptions opts;
    opts.injective = true;
    search_homomorphisms(
        a, b, opts,
        [&](const ElementMap& f) {
            result.witness = f;
            return false;
        },
        &result.stats);
    return result;
}

/// Every isomorphism, sorted lexicographically.
inline std::vector<ElementMap> all_isomorphisms(const BiquandleTable& a, const BiquandleTable& b,
                                                SearchStats* stats = nullptr) {
    require_biquandles(a, b);
    std::vector<ElementMap> out;
    if (a.order() != b.order()) return out;
    HomSearchOptions opts;
    opts.injective = true;
    search_homomorphisms(
        a, b, opts,
        [&](const ElementMap& f) {
            out.push_back(f);
            return true;
        },
        stats);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace bqt

#endif
