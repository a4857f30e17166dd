#ifndef BQT_MATRIX_IO_HPP
#define BQT_MATRIX_IO_HPP

#include <array>
#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "table.hpp"

namespace bqt {

/// Input error carrying a 1-based line and column.
class ParseError : public std::runtime_error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_ws(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

inline long long parse_integer(const Token& tok, std::size_t line) {
    long long value = 0;
    auto first = tok.text.data();
    auto last = first + tok.text.size();
    if (!tok.text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError(line, tok.column, "expected an integer, found '" + std::string(tok.text) + "'");
    return value;
}

/// Content lines of a text file with their 1-based line numbers; '#' lines and blank lines dropped.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!is_comment_or_blank(line)) out.emplace_back(number, line);
    }
    return out;
}

}  // namespace detail

/// Reads the block-matrix format: n on the first line, then 2n rows of 2n labels in 1..n
/// laid out as [up down; upbar downbar].
inline BiquandleTable parse_matrix(std::istream& in) {
    auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(1, 1, "empty input, expected the order n");

    const auto& [head_no, head] = lines.front();
    auto head_tokens = detail::split_ws(head);
    if (head_tokens.size() != 1)
        throw ParseError(head_no, head_tokens.size() > 1 ? head_tokens[1].column : 1,
                         "first line must hold only the order n");
    long long order = detail::parse_integer(head_tokens[0], head_no);
    if (order < 1 || order > 4096) throw ParseError(head_no, head_tokens[0].column, "order out of range");
    const auto n = static_cast<std::size_t>(order);

    if (lines.size() - 1 != 2 * n) {
        std::size_t at = lines.size() > 2 * n ? lines[2 * n + 1].first : lines.back().first + 1;
        throw ParseError(at, 1, "expected " + std::to_string(2 * n) + " matrix rows, found " +
                                    std::to_string(lines.size() - 1));
    }

    std::array<std::vector<std::uint32_t>, 4> blocks;
    for (auto& b : blocks) b.assign(n * n, 0);
    for (std::size_t r = 0; r < 2 * n; ++r) {
        const auto& [line_no, text] = lines[r + 1];
        auto tokens = detail::split_ws(text);
        if (tokens.size() != 2 * n) {
            std::size_t col = tokens.size() > 2 * n ? tokens[2 * n].column : text.size() + 1;
            throw ParseError(line_no, col,
                             "expected " + std::to_string(2 * n) + " entries, found " + std::to_string(tokens.size()));
        }
        for (std::size_t c = 0; c < 2 * n; ++c) {
            long long v = detail::parse_integer(tokens[c], line_no);
            if (v < 1 || v > order)
                throw ParseError(line_no, tokens[c].column,
                                 "entry " + std::to_string(v) + " outside 1.." + std::to_string(n));
            std::size_t block = (r / n) * 2 + (c / n);
            blocks[block][(r % n) * n + (c % n)] = static_cast<std::uint32_t>(v - 1);
        }
    }
    return BiquandleTable(n, std::move(blocks));
}

inline BiquandleTable parse_matrix(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_matrix(in);
}

inline std::string serialize_matrix(const BiquandleTable& t) {
    const std::size_t n = t.order();
    std::string out = std::to_string(n) + "\n";
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t c = 0; c < 2 * n; ++c) {
            Op op = static_cast<Op>((r / n) * 2 + (c / n));
            if (c) out += ' ';
            out += std::to_string(t.raw(op, r % n, c % n) + 1);
        }
        out += '\n';
    }
    return out;
}

}  // namespace bqt

#endif
