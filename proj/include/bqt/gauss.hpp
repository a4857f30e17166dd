#ifndef BQT_GAUSS_HPP
#define BQT_GAUSS_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matrix_io.hpp"

namespace bqt {

/// One classical passage along the traversal of a knot diagram.
struct Passage {
    bool over = false;
    std::uint32_t label = 0;
    int sign = +1;

    friend bool operator==(const Passage&, const Passage&) = default;
};

/// Signed over/under Gauss code of a one-component diagram. Virtual crossings are not
/// recorded.
struct GaussCode {
    std::vector<Passage> passages;

    std::size_t crossing_count() const noexcept { return passages.size() / 2; }
    friend bool operator==(const GaussCode&, const GaussCode&) = default;
};

/// Checks that every label occurs exactly twice, once over and once under, with equal signs.
/// Throws std::invalid_argument naming the offending label.
inline void validate_gauss_code(const GaussCode& code) {
    struct Seen {
        int overs = 0, unders = 0, sign = 0;
    };
    std::map<std::uint32_t, Seen> seen;
    for (const auto& p : code.passages) {
        if (p.sign != 1 && p.sign != -1) throw std::invalid_argument("crossing sign must be + or -");
        auto& s = seen[p.label];
        (p.over ? s.overs : s.unders) += 1;
        if (s.sign == 0)
            s.sign = p.sign;
        else if (s.sign != p.sign)
            throw std::invalid_argument("crossing " + std::to_string(p.label) + " has mismatched signs");
    }
    for (const auto& [label, s] : seen) {
        if (s.overs + s.unders != 2)
            throw std::invalid_argument("crossing " + std::to_string(label) + " must occur exactly twice");
        if (s.overs != 1)
            throw std::invalid_argument("crossing " + std::to_string(label) + " needs one over and one under passage");
    }
}

/// Parses comma-separated tokens "[OU]<label><sign>", e.g. "O1+,U2+,O2+,U1+". Whitespace
/// around tokens is ignored; the empty string is the zero-crossing unknot.
inline GaussCode parse_gauss_code(std::string_view text, std::size_t line = 1) {
    GaussCode code;
    auto blank = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    };
    if (blank(text)) return code;

    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view tok = text.substr(start, end - start);
        std::size_t column = start + 1;
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) {
            tok.remove_prefix(1);
            ++column;
        }
        while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);

        if (tok.size() < 3) throw ParseError(line, column, "malformed Gauss token '" + std::string(tok) + "'");
        Passage p;
        char kind = static_cast<char>(std::toupper(static_cast<unsigned char>(tok.front())));
        if (kind != 'O' && kind != 'U') throw ParseError(line, column, "Gauss token must start with O or U");
        p.over = kind == 'O';
        char sign = tok.back();
        if (sign != '+' && sign != '-') throw ParseError(line, column + tok.size() - 1, "Gauss token must end with + or -");
        p.sign = sign == '+' ? 1 : -1;
        auto digits = tok.substr(1, tok.size() - 2);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p.label);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || p.label == 0)
            throw ParseError(line, column + 1, "crossing label must be a positive integer");
        code.passages.push_back(p);
        start = end + 1;
    }
    try {
        validate_gauss_code(code);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line, 1, e.what());
    }
    return code;
}

inline std::string format_gauss_code(const GaussCode& code) {
    std::string out;
    for (std::size_t i = 0; i < code.passages.size(); ++i) {
        const auto& p = code.passages[i];
        if (i) out += ',';
        out += p.over ? 'O' : 'U';
        out += std::to_string(p.label);
        out += p.sign > 0 ? '+' : '-';
    }
    return out;
}

/// A named code from a fixture file.
struct GaussFixture {
    std::string name;
    GaussCode code;
};

/// Fixture file: one code per line; '#' starts a comment. A line may carry a name as
/// "name: code". An empty code is written as "name:" or a lone "-".
inline std::vector<GaussFixture> parse_gauss_file(std::istream& in) {
    std::vector<GaussFixture> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::string_view view = line;
        while (!view.empty() && std::isspace(static_cast<unsigned char>(view.back()))) view.remove_suffix(1);
        while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
        if (view.empty()) continue;
        GaussFixture fx;
        if (auto colon = view.find(':'); colon != std::string_view::npos) {
            fx.name = std::string(view.substr(0, colon));
            view.remove_prefix(colon + 1);
        } else {
            fx.name = "line " + std::to_string(number);
        }
        while (!view.empty() && std::isspace(static_cast<unsigned char>(view.front()))) view.remove_prefix(1);
        if (view == "-") view = {};
        fx.code = parse_gauss_code(view, number);
        out.push_back(std::move(fx));
    }
    return out;
}

/// Cyclic rotation of the traversal start.
inline GaussCode rotate_code(const GaussCode& code, std::size_t shift) {
    GaussCode out = code;
    if (!out.passages.empty())
        std::rotate(out.passages.begin(), out.passages.begin() + static_cast<std::ptrdiff_t>(shift % out.passages.size()),
                    out.passages.end());
    return out;
}

/// Renumbers crossings 1, 2, ... in order of first appearance.
inline GaussCode relabel_code(const GaussCode& code) {
    std::map<std::uint32_t, std::uint32_t> fresh;
    GaussCode out = code;
    for (auto& p : out.passages) {
        auto [it, inserted] = fresh.try_emplace(p.label, static_cast<std::uint32_t>(fresh.size() + 1));
        p.label = it->second;
    }
    return out;
}

/// Gauss code of the closure of a braid word. Generator +i (1-based) crosses the strands in
/// positions i and i+1 with the left strand over and sign +; -i has the left strand under
/// and sign -. Throws if the closure has more than one component.
inline GaussCode braid_closure_code(std::size_t strands, const std::vector<int>& word) {
    if (strands == 0) throw std::invalid_argument("braid needs at least one strand");
    for (int g : word)
        if (g == 0 || static_cast<std::size_t>(g < 0 ? -g : g) >= strands)
            throw std::invalid_argument("braid generator out of range");

    GaussCode code;
    std::size_t pos = 0;
    std::vector<bool> start_seen(strands, false);
    do {
        start_seen[pos] = true;
        for (std::size_t j = 0; j < word.size(); ++j) {
            int g = word[j];
            std::size_t left = static_cast<std::size_t>(g < 0 ? -g : g) - 1;
            if (pos != left && pos != left + 1) continue;
            bool on_left = pos == left;
            bool left_over = g > 0;
            code.passages.push_back({on_left == left_over, static_cast<std::uint32_t>(j + 1), g > 0 ? 1 : -1});
            pos = on_left ? left + 1 : left;
        }
    } while (pos != 0);
    if (std::count(start_seen.begin(), start_seen.end(), true) != static_cast<std::ptrdiff_t>(strands))
        throw std::invalid_argument("braid closure is not a knot");
    return relabel_code(code);
}

/// Crossing with its four semi-arc ids.
struct DiagramCrossing {
    std::uint32_t label = 0;
    int sign = +1;
    std::size_t under_in = 0, over_in = 0, under_out = 0, over_out = 0;
};

/// Semi-arc incidence structure. Semi-arc i runs from passage i to passage i+1 (cyclically),
/// so the arc entering passage p is p-1 and the arc leaving it is p.
struct Diagram {
    std::vector<DiagramCrossing> crossings;
    std::size_t semi_arcs = 1;
};

inline Diagram build_diagram(const GaussCode& code) {
    validate_gauss_code(code);
    Diagram d;
    const std::size_t len = code.passages.size();
    if (len == 0) return d;
    d.semi_arcs = len;
    std::map<std::uint32_t, std::size_t> slot;
    for (std::size_t p = 0; p < len; ++p) {
        const auto& pass = code.passages[p];
        auto [it, inserted] = slot.try_emplace(pass.label, d.crossings.size());
        if (inserted) d.crossings.push_back({pass.label, pass.sign});
        auto& c = d.crossings[it->second];
        std::size_t in = (p + len - 1) % len, out = p;
        if (pass.over) {
            c.over_in = in;
            c.over_out = out;
        } else {
            c.under_in = in;
            c.under_out = out;
        }
    }
    return d;
}

}  // namespace bqt

#endif
