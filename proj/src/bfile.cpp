#include "divpoly/bfile.hpp"

#include <cctype>
#include <charconv>

namespace divpoly {

namespace {

bool parse_i64(std::string_view tok, i64& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) toks.push_back(line.substr(start, i - start));
    }
    return toks;
}

} // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0].front() == '#') continue;
        if (toks.size() != 2)
            throw BFileError(lineno, "expected two integer fields, got " +
                                         std::to_string(toks.size()));
        BFileEntry e;
        if (!parse_i64(toks[0], e.index))
            throw BFileError(lineno, "bad index field '" + std::string(toks[0]) + "'");
        if (!parse_i64(toks[1], e.value))
            throw BFileError(lineno, "bad value field '" + std::string(toks[1]) + "'");
        if (!entries.empty() && e.index <= entries.back().index)
            throw BFileError(lineno, "index " + std::to_string(e.index) +
                                         " does not increase past " +
                                         std::to_string(entries.back().index));
        entries.push_back(e);
    }
    if (entries.empty()) throw BFileError(lineno, "no data lines");
    return entries;
}

} // namespace divpoly
