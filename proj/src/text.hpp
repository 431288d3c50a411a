#pragma once

// Tokenizing helpers shared by the Poly and QPoly text parsers.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "c2inv/error.hpp"

namespace c2inv::text {

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t depth = 0, start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')' && depth > 0)
            --depth;
        else if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

inline unsigned long parse_uint(std::string_view s, std::string_view context)
{
    unsigned long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("expected a natural number in '" + std::string(context) + "'");
    return value;
}

// Splits "base^k" into base and k (k = 1 when no caret).
inline std::pair<std::string_view, unsigned long> split_power(std::string_view factor)
{
    std::size_t close = factor.rfind(')');
    std::size_t caret = factor.rfind('^');
    if (caret == std::string_view::npos || (close != std::string_view::npos && caret < close))
        return {factor, 1};
    return {trim(factor.substr(0, caret)), parse_uint(trim(factor.substr(caret + 1)), factor)};
}

// Parses "x3" style variable names: a letter prefix followed by a 1-based index.
inline std::size_t parse_index(std::string_view name, std::size_t prefix_len, std::size_t m)
{
    std::size_t idx = parse_uint(name.substr(prefix_len), name);
    if (idx < 1 || idx > m)
        throw ParseError("variable '" + std::string(name) + "' out of range for m=" + std::to_string(m));
    return idx;
}

}  // namespace c2inv::text
