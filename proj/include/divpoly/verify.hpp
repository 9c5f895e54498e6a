// Verification sweeps: named invariant suites over n-ranges with
// worker partitioning, plus b-file cross-checks that route through
// polynomial construction end to end.
#ifndef DIVPOLY_VERIFY_HPP
#define DIVPOLY_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "divpoly/bfile.hpp"

namespace divpoly {

using i64 = std::int64_t;

struct Counterexample {
    i64 n = 0;
    std::string expected;
    std::string actual;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

// One named check over a range. pass + fail always equals the number of
// values processed (hi - lo + 1 once the sweep completes).
struct CheckReport {
    std::string name;
    i64 lo = 0;
    i64 hi = 0;
    i64 pass = 0;
    i64 fail = 0;
    std::optional<Counterexample> first_counterexample;

    bool ok() const { return fail == 0; }

    // Combine disjoint partitions: sums counts, keeps the minimal-n
    // counterexample so reports are independent of worker count.
    void merge(const CheckReport& other);
};

struct SuiteReport {
    std::string suite;
    i64 lo = 0;
    i64 hi = 0; // for the series suite this is the truncation order
    int workers = 1;
    std::vector<CheckReport> checks;
    double elapsed_seconds = 0.0;

    bool ok() const;
};

enum class Suite { theorem_main, p_identities, lemmas, structural, series };

std::optional<Suite> suite_from_name(std::string_view name);
std::string_view suite_name(Suite s);

// Default upper end of the sweep (truncation order for series).
i64 suite_default_hi(Suite s);

struct VerifyOptions {
    i64 lo = 1;
    i64 hi = 0;   // 0: suite default
    int workers = 1;
    int order = 0; // series suite only; 0: default
};

// Runs the named suite. Throws std::invalid_argument on a bad range or
// worker count (usage errors); mathematical failures are reported, not
// thrown.
SuiteReport run_suite(Suite s, const VerifyOptions& opts);

enum class Sequence { a002324, a096936 };

std::optional<Sequence> sequence_from_name(std::string_view name);
std::string_view sequence_name(Sequence s);

// Sequence value computed through L_n construction and evaluation, the
// end-to-end path used by the b-file check.
i64 sequence_value_via_poly(Sequence s, i64 n);

// The divisor-count closed form for the same sequence.
i64 sequence_value_closed(Sequence s, i64 n);

struct OeisReport {
    std::string sequence;
    i64 lo = 0;
    i64 hi = 0;
    i64 checked = 0;
    std::optional<Counterexample> mismatch; // n, file value, computed value
    double elapsed_seconds = 0.0;

    bool ok() const { return !mismatch.has_value(); }
};

// Compares entries against the polynomial-route values over [lo, hi]
// ([first index, last index] of the file when lo = hi = 0, clamped to
// n >= 1). Throws std::runtime_error when the file does not cover the
// requested range (a usage error, not a counterexample).
OeisReport oeis_check(Sequence s, const std::vector<BFileEntry>& entries,
                      i64 lo = 0, i64 hi = 0);

} // namespace divpoly

#endif
