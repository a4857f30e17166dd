#ifndef BQT_TESTS_SUPPORT_HPP
#define BQT_TESTS_SUPPORT_HPP

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <bqt/bqt.hpp>

namespace bqt::test {

inline std::string data_path(const std::string& name) { return std::string(BQT_DATA_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline BiquandleTable load_table(const std::string& name) { return parse_matrix(slurp(data_path(name))); }

// Rows of the 8x8 matrix printed for the Z_2 + Z_2 example.
inline const std::vector<std::vector<int>>& z2sq_switch_grid() {
    static const std::vector<std::vector<int>> grid{
        {3, 1, 2, 4, 4, 1, 3, 2}, {2, 4, 3, 1, 2, 3, 1, 4}, {1, 3, 4, 2, 3, 2, 4, 1}, {4, 2, 1, 3, 1, 4, 2, 3},
        {4, 1, 3, 2, 3, 1, 2, 4}, {2, 3, 1, 4, 2, 4, 3, 1}, {3, 2, 4, 1, 1, 3, 4, 2}, {1, 4, 2, 3, 4, 2, 1, 3},
    };
    return grid;
}

inline BiquandleTable table_from_grid(const std::vector<std::vector<int>>& grid) {
    const std::size_t n = grid.size() / 2;
    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (auto& b : blocks) b.assign(n * n, 0);
    for (std::size_t r = 0; r < 2 * n; ++r)
        for (std::size_t c = 0; c < 2 * n; ++c) {
            std::size_t blk = (r / n) * 2 + c / n;
            blocks[blk][(r % n) * n + c % n] = static_cast<std::uint32_t>(grid[r][c] - 1);
        }
    return BiquandleTable(n, blocks);
}

inline BiquandleTable z2sq_switch() { return table_from_grid(z2sq_switch_grid()); }

inline SwitchBiquandle z2sq_switch_data() {
    auto carrier = plain_module(2, 2);
    return make_switch_biquandle(carrier, IntMatrix(2, {0, 1, 1, 1}), IntMatrix(2, {1, 1, 0, 1}),
                                 carrier.from_coords({1, 1}));
}

inline bool is_unit(long long v, long long m) { return std::gcd(v, m) == 1; }

inline std::vector<long long> units(long long m) {
    std::vector<long long> out;
    for (long long v = 1; v < m; ++v)
        if (is_unit(v, m)) out.push_back(v);
    if (m == 2 && out.empty()) out.push_back(1);
    return out;
}

// Every scalar Alexander module over Z_n with unit s, t.
inline std::vector<FiniteModule> scalar_modules(long long n) {
    std::vector<FiniteModule> out;
    for (auto s : units(n))
        for (auto t : units(n)) out.push_back(FiniteModule::cyclic(n, s, t));
    return out;
}

// Z_2^2 with every commuting invertible pair (S, T).
inline std::vector<FiniteModule> z2sq_modules() {
    std::vector<IntMatrix> gl;
    for (long long code = 0; code < 16; ++code) {
        IntMatrix a(2, {code & 1, (code >> 1) & 1, (code >> 2) & 1, (code >> 3) & 1});
        if (mat_inverse(a, 2)) gl.push_back(a);
    }
    std::vector<FiniteModule> out;
    for (const auto& s : gl)
        for (const auto& t : gl)
            if (mat_mul(s, t, 2) == mat_mul(t, s, 2)) out.emplace_back(2, 2, s, t);
    return out;
}

// Scalar modules of every order up to max_order, plus Z_2^2 when it fits.
inline std::vector<FiniteModule> small_modules(std::size_t max_order) {
    std::vector<FiniteModule> out;
    for (long long n = 2; n <= static_cast<long long>(max_order); ++n)
        for (auto& M : scalar_modules(n)) out.push_back(M);
    if (max_order >= 4)
        for (auto& M : z2sq_modules()) out.push_back(M);
    return out;
}

inline BiquandleTable random_table(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(n - 1));
    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (auto& b : blocks) {
        b.resize(n * n);
        for (auto& v : b) v = pick(rng);
    }
    return BiquandleTable(n, blocks);
}

inline BiquandleTable with_cell(const BiquandleTable& t, Op op, std::size_t a, std::size_t b, std::uint32_t v) {
    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (Op o : all_ops) blocks[static_cast<std::size_t>(o)] = t.block(o);
    blocks[static_cast<std::size_t>(op)][a * t.order() + b] = v;
    return BiquandleTable(t.order(), blocks);
}

// Fully naive labelling count: every assignment of target elements to semi-arcs.
inline std::uint64_t naive_count(const GaussCode& code, const BiquandleTable& t) {
    auto d = build_diagram(code);
    const std::size_t n = t.order(), arcs = d.semi_arcs;
    std::vector<std::uint32_t> v(arcs, 0);
    std::uint64_t count = 0;
    while (true) {
        bool ok = true;
        for (const auto& c : d.crossings) {
            bool pos = c.sign > 0;
            if (t.raw(pos ? Op::up : Op::upbar, v[c.under_in], v[c.over_in]) != v[c.under_out] ||
                t.raw(pos ? Op::down : Op::downbar, v[c.over_in], v[c.under_in]) != v[c.over_out]) {
                ok = false;
                break;
            }
        }
        count += ok;
        std::size_t i = 0;
        while (i < arcs && ++v[i] == n) v[i++] = 0;
        if (i == arcs) break;
    }
    return count;
}

}  // namespace bqt::test

#endif
