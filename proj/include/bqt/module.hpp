#ifndef BQT_MODULE_HPP
#define BQT_MODULE_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matrix_io.hpp"
#include "table.hpp"

namespace bqt {

inline long long mod_reduce(long long v, long long m) noexcept {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

/// Inverse of a modulo m, or nullopt when gcd(a, m) != 1.
inline std::optional<long long> mod_inverse(long long a, long long m) {
    long long old_r = mod_reduce(a, m), r = m, old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
    }
    if (old_r != 1) return std::nullopt;
    return mod_reduce(old_s, m);
}

/// Small square integer matrix; arithmetic helpers take the modulus explicitly.
class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t k) : k_(k), a_(k * k, 0) {}
    IntMatrix(std::size_t k, std::vector<long long> entries) : k_(k), a_(std::move(entries)) {
        if (a_.size() != k * k) throw std::invalid_argument("matrix needs k*k entries");
    }

    static IntMatrix identity(std::size_t k) {
        IntMatrix r(k);
        for (std::size_t i = 0; i < k; ++i) r(i, i) = 1;
        return r;
    }
    static IntMatrix scalar(long long v) { return IntMatrix(1, {v}); }

    std::size_t dim() const noexcept { return k_; }
    long long& operator()(std::size_t i, std::size_t j) { return a_[i * k_ + j]; }
    long long operator()(std::size_t i, std::size_t j) const { return a_[i * k_ + j]; }
    const std::vector<long long>& entries() const noexcept { return a_; }

    IntMatrix reduced(long long m) const {
        IntMatrix r = *this;
        for (auto& v : r.a_) v = mod_reduce(v, m);
        return r;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

   private:
    std::size_t k_ = 0;
    std::vector<long long> a_;
};

inline IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y, long long m) {
    const std::size_t k = x.dim();
    IntMatrix r(k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long acc = 0;
            for (std::size_t l = 0; l < k; ++l) acc = mod_reduce(acc + x(i, l) * y(l, j), m);
            r(i, j) = acc;
        }
    return r;
}

inline IntMatrix mat_sub(const IntMatrix& x, const IntMatrix& y, long long m) {
    IntMatrix r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) r(i, j) = mod_reduce(x(i, j) - y(i, j), m);
    return r;
}

inline IntMatrix mat_add(const IntMatrix& x, const IntMatrix& y, long long m) {
    IntMatrix r(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) r(i, j) = mod_reduce(x(i, j) + y(i, j), m);
    return r;
}

namespace detail {

inline IntMatrix minor_of(const IntMatrix& x, std::size_t row, std::size_t col) {
    const std::size_t k = x.dim();
    IntMatrix r(k - 1);
    for (std::size_t i = 0, ri = 0; i < k; ++i) {
        if (i == row) continue;
        for (std::size_t j = 0, rj = 0; j < k; ++j) {
            if (j == col) continue;
            r(ri, rj++) = x(i, j);
        }
        ++ri;
    }
    return r;
}

}  // namespace detail

/// Laplace expansion; fine for the small ranks used here.
inline long long mat_det(const IntMatrix& x, long long m) {
    const std::size_t k = x.dim();
    if (k == 0) return mod_reduce(1, m);
    if (k == 1) return mod_reduce(x(0, 0), m);
    long long acc = 0;
    for (std::size_t j = 0; j < k; ++j) {
        long long term = mod_reduce(x(0, j), m) * mat_det(detail::minor_of(x, 0, j), m) % m;
        acc = mod_reduce(j % 2 ? acc - term : acc + term, m);
    }
    return acc;
}

/// Inverse over Z_m via the adjugate; nullopt when det is not a unit.
inline std::optional<IntMatrix> mat_inverse(const IntMatrix& x, long long m) {
    const std::size_t k = x.dim();
    auto inv_det = mod_inverse(mat_det(x, m), m);
    if (!inv_det) return std::nullopt;
    IntMatrix r(k);
    if (k == 1) {
        r(0, 0) = *inv_det;
        return r;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            long long cof = mat_det(detail::minor_of(x, j, i), m);
            if ((i + j) % 2) cof = mod_reduce(-cof, m);
            r(i, j) = cof * *inv_det % m;
        }
    return r;
}

/// Element of Z_m^k, encoded little-endian: code = sum_i v_i m^i.
class ModuleElement {
   public:
    constexpr ModuleElement() noexcept = default;
    constexpr explicit ModuleElement(std::uint32_t code) noexcept : code_(code) {}

    constexpr std::uint32_t code() const noexcept { return code_; }
    constexpr bool is_zero() const noexcept { return code_ == 0; }

    friend constexpr auto operator<=>(ModuleElement, ModuleElement) noexcept = default;

   private:
    std::uint32_t code_ = 0;
};

/// Z_m^k with commuting invertible actions S (for s) and T (for t).
///
/// Elements are ordered by code; code order is the canonical element order. Biquandle
/// tables built from a module label the element with code r as x_r, and the zero element
/// as x_{m^k}. For Z_n this is the labelling Z_n = {1, ..., n}; for Z_2^2 it gives
/// x_1 = (1,0), x_2 = (0,1), x_3 = (1,1), x_4 = (0,0).
class FiniteModule {
   public:
    static constexpr std::size_t max_size = 1u << 16;

    FiniteModule() = default;

    /// Validating constructor: m >= 2, k >= 1, det S and det T units mod m, ST = TS.
    FiniteModule(long long m, std::size_t k, const IntMatrix& s, const IntMatrix& t) {
        if (m < 2) throw std::invalid_argument("modulus must be at least 2");
        if (k < 1) throw std::invalid_argument("rank must be at least 1");
        if (s.dim() != k || t.dim() != k) throw std::invalid_argument("action matrices must be k x k");
        std::size_t size = 1;
        for (std::size_t i = 0; i < k; ++i) {
            size *= static_cast<std::size_t>(m);
            if (size > max_size) throw std::invalid_argument("module too large");
        }
        auto data = std::make_shared<Data>();
        data->m = m;
        data->k = k;
        data->size = size;
        data->s = s.reduced(m);
        data->t = t.reduced(m);
        auto s_inv = mat_inverse(data->s, m);
        if (!s_inv) throw std::invalid_argument("det(S) is not a unit mod " + std::to_string(m));
        auto t_inv = mat_inverse(data->t, m);
        if (!t_inv) throw std::invalid_argument("det(T) is not a unit mod " + std::to_string(m));
        if (mat_mul(data->s, data->t, m) != mat_mul(data->t, data->s, m))
            throw std::invalid_argument("S and T do not commute mod " + std::to_string(m));
        data->s_inv = *s_inv;
        data->t_inv = *t_inv;
        data_ = data;
        const auto id = IntMatrix::identity(k);
        data->act_s = tabulate(data->s);
        data->act_t = tabulate(data->t);
        data->act_s_inv = tabulate(data->s_inv);
        data->act_t_inv = tabulate(data->t_inv);
        data->one_minus_st = tabulate(mat_sub(id, mat_mul(data->s, data->t, m), m));
        data->one_minus_s = tabulate(mat_sub(id, data->s, m));
    }

    static FiniteModule cyclic(long long m, long long s, long long t) {
        return FiniteModule(m, 1, IntMatrix::scalar(s), IntMatrix::scalar(t));
    }

    long long modulus() const noexcept { return data_->m; }
    std::size_t rank() const noexcept { return data_->k; }
    std::size_t size() const noexcept { return data_->size; }
    const IntMatrix& s_matrix() const noexcept { return data_->s; }
    const IntMatrix& t_matrix() const noexcept { return data_->t; }
    const IntMatrix& s_inverse() const noexcept { return data_->s_inv; }
    const IntMatrix& t_inverse() const noexcept { return data_->t_inv; }
    bool is_scalar() const noexcept { return data_->k == 1; }

    ModuleElement zero() const noexcept { return ModuleElement(0); }

    std::vector<ModuleElement> elements() const {
        std::vector<ModuleElement> out;
        out.reserve(size());
        for (std::size_t c = 0; c < size(); ++c) out.emplace_back(static_cast<std::uint32_t>(c));
        return out;
    }

    std::vector<long long> coords(ModuleElement x) const {
        std::vector<long long> v(rank());
        std::uint32_t c = x.code();
        for (auto& d : v) {
            d = c % data_->m;
            c /= static_cast<std::uint32_t>(data_->m);
        }
        return v;
    }

    ModuleElement from_coords(const std::vector<long long>& v) const {
        if (v.size() != rank()) throw std::invalid_argument("coordinate vector has wrong length");
        std::uint32_t c = 0;
        for (std::size_t i = v.size(); i-- > 0;) c = c * static_cast<std::uint32_t>(data_->m) + mod_reduce(v[i], data_->m);
        return ModuleElement(c);
    }

    ModuleElement add(ModuleElement x, ModuleElement y) const {
        const auto m = static_cast<std::uint32_t>(data_->m);
        std::uint32_t a = x.code(), b = y.code(), out = 0, place = 1;
        for (std::size_t i = 0; i < rank(); ++i) {
            out += ((a % m + b % m) % m) * place;
            a /= m;
            b /= m;
            place *= m;
        }
        return ModuleElement(out);
    }
    ModuleElement neg(ModuleElement x) const {
        const auto m = static_cast<std::uint32_t>(data_->m);
        std::uint32_t a = x.code(), out = 0, place = 1;
        for (std::size_t i = 0; i < rank(); ++i) {
            out += ((m - a % m) % m) * place;
            a /= m;
            place *= m;
        }
        return ModuleElement(out);
    }
    ModuleElement sub(ModuleElement x, ModuleElement y) const { return add(x, neg(y)); }

    ModuleElement s(ModuleElement x) const { return ModuleElement(data_->act_s[x.code()]); }
    ModuleElement t(ModuleElement x) const { return ModuleElement(data_->act_t[x.code()]); }
    ModuleElement s_inv(ModuleElement x) const { return ModuleElement(data_->act_s_inv[x.code()]); }
    ModuleElement t_inv(ModuleElement x) const { return ModuleElement(data_->act_t_inv[x.code()]); }
    /// (1 - st)x, computed as (I - ST)x.
    ModuleElement one_minus_st(ModuleElement x) const { return ModuleElement(data_->one_minus_st[x.code()]); }
    /// (1 - s)x.
    ModuleElement one_minus_s(ModuleElement x) const { return ModuleElement(data_->one_minus_s[x.code()]); }

    ModuleElement apply(const IntMatrix& a, ModuleElement x) const {
        auto v = coords(x);
        std::vector<long long> r(rank(), 0);
        for (std::size_t i = 0; i < rank(); ++i)
            for (std::size_t j = 0; j < rank(); ++j) r[i] = mod_reduce(r[i] + a(i, j) * v[j], data_->m);
        return from_coords(r);
    }

    /// Table label of x (see class comment).
    Element label(ModuleElement x) const { return Element(x.is_zero() ? size() : x.code()); }
    ModuleElement element_at(Element e) const {
        if (e.index() < 1 || e.index() > size()) throw std::out_of_range("label outside module");
        return ModuleElement(e.index() == size() ? 0u : static_cast<std::uint32_t>(e.index()));
    }

    /// "3" for scalar modules, "(1,0)" otherwise.
    std::string format(ModuleElement x) const {
        auto v = coords(x);
        if (v.size() == 1) return std::to_string(v[0]);
        std::string out = "(";
        for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
        return out + ")";
    }

    friend bool operator==(const FiniteModule& a, const FiniteModule& b) {
        return a.modulus() == b.modulus() && a.s_matrix() == b.s_matrix() && a.t_matrix() == b.t_matrix();
    }

   private:
    struct Data {
        long long m = 0;
        std::size_t k = 0;
        std::size_t size = 0;
        IntMatrix s, t, s_inv, t_inv;
        std::vector<std::uint32_t> act_s, act_t, act_s_inv, act_t_inv, one_minus_st, one_minus_s;
    };

    std::vector<std::uint32_t> tabulate(const IntMatrix& a) const {
        std::vector<std::uint32_t> out(size());
        for (std::size_t c = 0; c < size(); ++c) out[c] = apply(a, ModuleElement(static_cast<std::uint32_t>(c))).code();
        return out;
    }

    std::shared_ptr<const Data> data_;
};

inline FiniteModule make_module(long long m, std::size_t k, const IntMatrix& s, const IntMatrix& t) {
    return FiniteModule(m, k, s, t);
}

/// Module description: "m k", then k rows of S, then k rows of T. For k = 1 this reads as
/// "m 1", "s", "t". Blank and '#' lines are skipped.
inline FiniteModule parse_module(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "empty module description");
    auto head = detail::split_ws(lines[0].second);
    if (head.size() != 2) throw ParseError(lines[0].first, 1, "first line must be 'm k'");
    long long m = detail::parse_integer(head[0], lines[0].first);
    long long k = detail::parse_integer(head[1], lines[0].first);
    if (m < 2) throw ParseError(lines[0].first, head[0].column, "modulus must be at least 2");
    if (k < 1 || k > 16) throw ParseError(lines[0].first, head[1].column, "rank out of range");
    const auto rank = static_cast<std::size_t>(k);
    if (lines.size() != 1 + 2 * rank)
        throw ParseError(lines.back().first, 1, "expected " + std::to_string(2 * rank) + " matrix rows");
    auto read = [&](std::size_t first_row) {
        IntMatrix a(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            const auto& [no, text] = lines[first_row + i];
            auto toks = detail::split_ws(text);
            if (toks.size() != rank) throw ParseError(no, 1, "expected " + std::to_string(rank) + " entries");
            for (std::size_t j = 0; j < rank; ++j) a(i, j) = detail::parse_integer(toks[j], no);
        }
        return a;
    };
    IntMatrix s = read(1), t = read(1 + rank);
    try {
        return FiniteModule(m, rank, s, t);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lines[1].first, 1, e.what());
    }
}

inline FiniteModule parse_module(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_module(in);
}

}  // namespace bqt

#endif
