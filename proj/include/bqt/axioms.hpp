#ifndef BQT_AXIOMS_HPP
#define BQT_AXIOMS_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "table.hpp"

namespace bqt {

struct AxiomViolation {
    enum class Kind { equation, existence, uniqueness };

    std::string axiom;  // "1.i" .. "4.iv"
    Kind kind = Kind::equation;
    std::vector<Element> witness;

    friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

struct AxiomReport {
    bool passed = true;
    std::vector<AxiomViolation> violations;

    bool violates(std::string_view axiom) const {
        for (const auto& v : violations)
            if (v.axiom == axiom) return true;
        return false;
    }
};

namespace detail {

inline std::vector<Element> labels(std::initializer_list<std::size_t> zero_based) {
    std::vector<Element> out;
    for (auto v : zero_based) out.emplace_back(v + 1);
    return out;
}

// Filters 0..n-1 through the clauses of one existence-and-uniqueness group. When the
// candidate set empties, the clause that emptied it is blamed; surplus solutions are
// blamed on the group's last clause.
template <class Clauses>
void check_unique_solution(std::size_t n, const Clauses& clauses, std::initializer_list<std::size_t> given,
                           std::vector<AxiomViolation>& out) {
    std::vector<std::size_t> candidates(n);
    for (std::size_t x = 0; x < n; ++x) candidates[x] = x;
    for (const auto& [id, holds] : clauses) {
        std::vector<std::size_t> kept;
        for (auto x : candidates)
            if (holds(x)) kept.push_back(x);
        candidates.swap(kept);
        if (candidates.empty()) {
            out.push_back({id, AxiomViolation::Kind::existence, labels(given)});
            return;
        }
    }
    if (candidates.size() > 1) {
        auto w = labels(given);
        w.emplace_back(candidates[0] + 1);
        w.emplace_back(candidates[1] + 1);
        out.push_back({std::get<0>(clauses.back()), AxiomViolation::Kind::uniqueness, std::move(w)});
    }
}

}  // namespace detail

/// Exhaustive check of every clause of biquandle axioms 1-4. Exponents compose left to
/// right, so a^{bc} = (a^b)^c. All violations are reported, each with its witness.
inline AxiomReport verify_biquandle(const BiquandleTable& t) {
    using detail::labels;
    const std::size_t n = t.order();
    auto up = [&](std::size_t a, std::size_t b) -> std::size_t { return t.raw(Op::up, a, b); };
    auto dn = [&](std::size_t a, std::size_t b) -> std::size_t { return t.raw(Op::down, a, b); };
    auto upb = [&](std::size_t a, std::size_t b) -> std::size_t { return t.raw(Op::upbar, a, b); };
    auto dnb = [&](std::size_t a, std::size_t b) -> std::size_t { return t.raw(Op::downbar, a, b); };

    std::vector<AxiomViolation> out;
    auto eq = [&](bool ok, const char* id, std::initializer_list<std::size_t> w) {
        if (!ok) out.push_back({id, AxiomViolation::Kind::equation, labels(w)});
    };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            eq(upb(up(a, b), dn(b, a)) == a, "1.i", {a, b});
            eq(dnb(dn(b, a), up(a, b)) == b, "1.ii", {a, b});
            eq(up(upb(a, b), dnb(b, a)) == a, "1.iii", {a, b});
            eq(dn(dnb(b, a), upb(a, b)) == b, "1.iv", {a, b});
        }

    using Clause = std::tuple<const char*, std::function<bool(std::size_t)>>;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<Clause> xs{
                {"2.i", [&](std::size_t x) { return x == up(a, dnb(b, x)); }},
                {"2.ii", [&](std::size_t x) { return a == upb(x, b); }},
                {"2.iii", [&](std::size_t x) { return b == dn(dnb(b, x), a); }},
            };
            detail::check_unique_solution(n, xs, {a, b}, out);
            std::vector<Clause> ys{
                {"2.iv", [&](std::size_t y) { return y == upb(a, dn(b, y)); }},
                {"2.v", [&](std::size_t y) { return a == up(y, b); }},
                {"2.vi", [&](std::size_t y) { return b == dnb(dn(b, y), a); }},
            };
            detail::check_unique_solution(n, ys, {a, b}, out);
        }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                eq(up(up(a, b), c) == up(up(a, dn(c, b)), up(b, c)), "3.i", {a, b, c});
                eq(dn(dn(c, b), a) == dn(dn(c, up(a, b)), dn(b, a)), "3.ii", {a, b, c});
                eq(up(dn(b, a), dn(c, up(a, b))) == dn(up(b, c), up(a, dn(c, b))), "3.iii", {a, b, c});
                eq(upb(upb(a, b), c) == upb(upb(a, dnb(c, b)), upb(b, c)), "3.iv", {a, b, c});
                eq(dnb(dnb(c, b), a) == dnb(dnb(c, upb(a, b)), dnb(b, a)), "3.v", {a, b, c});
                eq(upb(dnb(b, a), dnb(c, upb(a, b))) == dnb(upb(b, c), upb(a, dnb(c, b))), "3.vi", {a, b, c});
            }

    for (std::size_t a = 0; a < n; ++a) {
        std::vector<Clause> xs{
            {"4.i", [&](std::size_t x) { return x == dn(a, x); }},
            {"4.ii", [&](std::size_t x) { return a == up(x, a); }},
        };
        detail::check_unique_solution(n, xs, {a}, out);
        std::vector<Clause> ys{
            {"4.iii", [&](std::size_t y) { return y == upb(a, y); }},
            {"4.iv", [&](std::size_t y) { return a == dnb(y, a); }},
        };
        detail::check_unique_solution(n, ys, {a}, out);
    }

    AxiomReport report;
    report.passed = out.empty();
    report.violations = std::move(out);
    return report;
}

/// For every b, each of a -> a^b, a_b, a^{\bar b}, a_{\bar b} is a permutation.
inline bool columns_are_permutations(const BiquandleTable& t) {
    const std::size_t n = t.order();
    for (Op op : all_ops)
        for (std::size_t b = 0; b < n; ++b) {
            std::vector<bool> seen(n, false);
            for (std::size_t a = 0; a < n; ++a) {
                auto v = t.raw(op, a, b);
                if (seen[v]) return false;
                seen[v] = true;
            }
        }
    return true;
}

/// S(a,b) = (b_a, a^b) is a bijection of B x B and satisfies
/// (S x I)(I x S)(S x I) = (I x S)(S x I)(I x S).
inline bool yang_baxter_check(const BiquandleTable& t) {
    const std::size_t n = t.order();
    auto switch_map = [&](std::size_t a, std::size_t b) {
        return std::pair<std::size_t, std::size_t>{t.raw(Op::down, b, a), t.raw(Op::up, a, b)};
    };

    std::vector<bool> hit(n * n, false);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            auto [l, r] = switch_map(a, b);
            if (hit[l * n + r]) return false;
            hit[l * n + r] = true;
        }

    using Triple = std::array<std::size_t, 3>;
    auto left = [&](Triple v) {
        std::tie(v[0], v[1]) = switch_map(v[0], v[1]);
        return v;
    };
    auto right = [&](Triple v) {
        std::tie(v[1], v[2]) = switch_map(v[1], v[2]);
        return v;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                Triple v{a, b, c};
                if (left(right(left(v))) != right(left(right(v)))) return false;
            }
    return true;
}

}  // namespace bqt

#endif
