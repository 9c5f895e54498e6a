// Parser for OEIS-style b-files: one "index value" pair per line,
// '#' comment lines and blank lines skipped, indices strictly
// increasing.
#ifndef DIVPOLY_BFILE_HPP
#define DIVPOLY_BFILE_HPP

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace divpoly {

using i64 = std::int64_t;

struct BFileEntry {
    i64 index = 0;
    i64 value = 0;
    friend bool operator==(const BFileEntry&, const BFileEntry&) = default;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Throws BFileError on malformed lines, non-monotone indices, or an
// empty file (no data lines at all).
std::vector<BFileEntry> parse_bfile(std::istream& in);

} // namespace divpoly

#endif
