#ifndef BQT_COUNT_HPP
#define BQT_COUNT_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "axioms.hpp"
#include "gauss.hpp"
#include "table.hpp"

namespace bqt {

struct HomCountReport {
    std::uint64_t count = 0;
    std::size_t order = 0;
    std::vector<std::vector<Element>> assignments;  // per-semi-arc labels, only when requested
};

namespace detail {

// Crossing rules. Positive: under-out = under-in ^ over-in, over-out = over-in _ under-in.
// Negative: the barred operations. Outputs determine inputs through the axiom 1 inverses.
class ColouringCounter {
   public:
    ColouringCounter(const Diagram& d, const BiquandleTable& t, bool keep)
        : d_(d), t_(t), keep_(keep), value_(d.semi_arcs, unset) {}

    HomCountReport run() {
        HomCountReport r;
        r.order = t_.order();
        report_ = &r;
        search();
        return r;
    }

   private:
    static constexpr std::uint32_t unset = UINT32_MAX;

    bool set(std::size_t arc, std::uint32_t v) {
        if (value_[arc] == unset) {
            value_[arc] = v;
            trail_.push_back(arc);
            changed_ = true;
            return true;
        }
        return value_[arc] == v;
    }

    bool propagate() {
        do {
            changed_ = false;
            for (const auto& c : d_.crossings) {
                auto ui = value_[c.under_in], oi = value_[c.over_in];
                auto uo = value_[c.under_out], oo = value_[c.over_out];
                bool pos = c.sign > 0;
                if (ui != unset && oi != unset) {
                    if (!set(c.under_out, t_.raw(pos ? Op::up : Op::upbar, ui, oi))) return false;
                    if (!set(c.over_out, t_.raw(pos ? Op::down : Op::downbar, oi, ui))) return false;
                }
                uo = value_[c.under_out];
                oo = value_[c.over_out];
                if (uo != unset && oo != unset) {
                    if (!set(c.under_in, t_.raw(pos ? Op::upbar : Op::up, uo, oo))) return false;
                    if (!set(c.over_in, t_.raw(pos ? Op::downbar : Op::down, oo, uo))) return false;
                }
            }
        } while (changed_);
        return true;
    }

    void search() {
        std::size_t mark = trail_.size();
        if (propagate()) {
            std::size_t free_arc = d_.semi_arcs;
            for (std::size_t a = 0; a < d_.semi_arcs; ++a)
                if (value_[a] == unset) {
                    free_arc = a;
                    break;
                }
            if (free_arc == d_.semi_arcs) {
                ++report_->count;
                if (keep_) {
                    std::vector<Element> row;
                    for (auto v : value_) row.emplace_back(v + 1);
                    report_->assignments.push_back(std::move(row));
                }
            } else {
                for (std::uint32_t v = 0; v < t_.order(); ++v) {
                    std::size_t inner = trail_.size();
                    set(free_arc, v);
                    search();
                    undo(inner);
                }
            }
        }
        undo(mark);
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            value_[trail_.back()] = unset;
            trail_.pop_back();
        }
    }

    const Diagram& d_;
    const BiquandleTable& t_;
    bool keep_;
    std::vector<std::uint32_t> value_;
    std::vector<std::size_t> trail_;
    bool changed_ = false;
    HomCountReport* report_ = nullptr;
};

}  // namespace detail

/// |Hom(B(K), T)|: labellings of the semi-arcs by elements of T satisfying the crossing
/// relations. Free semi-arcs are branched on in traversal order; everything else is
/// forced by propagation.
inline HomCountReport count_homs(const Diagram& d, const BiquandleTable& target, bool keep_assignments = false) {
    if (!verify_biquandle(target).passed) throw std::invalid_argument("target table is not a biquandle");
    return detail::ColouringCounter(d, target, keep_assignments).run();
}

inline HomCountReport count_homs(const GaussCode& code, const BiquandleTable& target, bool keep_assignments = false) {
    return count_homs(build_diagram(code), target, keep_assignments);
}

/// A pair of diagrams related by a Reidemeister or virtual move.
struct MovePair {
    std::string name;
    GaussCode before;
    GaussCode after;
};

/// Curated move-related pairs: R1 kinks of both signs, direct and reverse R2 clasps, R2
/// inserted into a trefoil, braid-relation R3 (positive and mixed), Markov stabilization,
/// a kink on the virtual trefoil, and a virtual detour (identical codes).
inline std::vector<MovePair> curated_move_pairs() {
    auto code = [](std::string_view s) { return parse_gauss_code(s); };
    GaussCode unknot;
    GaussCode trefoil = braid_closure_code(2, {1, 1, 1});
    std::vector<MovePair> pairs{
        {"R1 positive kink", unknot, code("O1+,U1+")},
        {"R1 negative kink", unknot, code("O1-,U1-")},
        {"R1 kink, under first", unknot, code("U1+,O1+")},
        {"R2 direct clasp", unknot, code("O1+,O2-,U1+,U2-")},
        {"R2 direct clasp, mirrored signs", unknot, code("O1-,O2+,U1-,U2+")},
        {"R2 reverse clasp", unknot, code("O1+,O2-,U2-,U1+")},
        {"R2 reverse clasp, mirrored signs", unknot, code("O1-,O2+,U2+,U1-")},
        {"R2 into trefoil (direct)", trefoil, code("O1+,U2+,O4+,O5-,O3+,U1+,U4+,U5-,O2+,U3+")},
        {"R2 into trefoil (reverse)", trefoil, code("O1+,U2+,O4-,O5+,O3+,U1+,U5+,U4-,O2+,U3+")},
        {"R3 braid relation, trefoil", braid_closure_code(3, {1, 2, 1, 1}), braid_closure_code(3, {2, 1, 2, 1})},
        {"R3 mixed relation, figure eight", braid_closure_code(3, {1, 2, -1, 2}), braid_closure_code(3, {-2, 1, 2, 2})},
        {"R3 negative relation", braid_closure_code(3, {-1, -2, -1, -1}), braid_closure_code(3, {-2, -1, -2, -1})},
        {"Markov stabilization of trefoil", trefoil, braid_closure_code(3, {1, 1, 1, 2})},
        {"Markov stabilization, negative", trefoil, braid_closure_code(3, {1, 1, 1, -2})},
        {"R1 on virtual trefoil", code("O1-,O2-,U1-,U2-"), code("O1-,O3+,U3+,O2-,U1-,U2-")},
        {"virtual detour", code("O1-,O2-,U1-,U2-"), code("O1-,O2-,U1-,U2-")},
    };
    return pairs;
}

struct MoveCheck {
    std::string name;
    std::uint64_t before = 0;
    std::uint64_t after = 0;
    bool equal() const noexcept { return before == after; }
};

struct ReidemeisterReport {
    std::vector<MoveCheck> checks;
    bool passed() const {
        for (const auto& c : checks)
            if (!c.equal()) return false;
        return true;
    }
};

inline ReidemeisterReport reidemeister_suite(const BiquandleTable& target) {
    if (!verify_biquandle(target).passed) throw std::invalid_argument("target table is not a biquandle");
    ReidemeisterReport report;
    for (const auto& pair : curated_move_pairs()) {
        auto before = detail::ColouringCounter(build_diagram(pair.before), target, false).run().count;
        auto after = detail::ColouringCounter(build_diagram(pair.after), target, false).run().count;
        report.checks.push_back({pair.name, before, after});
    }
    return report;
}

}  // namespace bqt

#endif
