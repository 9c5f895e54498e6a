#include <doctest.h>

#include <stdexcept>

#include "divpoly/verify.hpp"

using namespace divpoly;

TEST_CASE("suite names round-trip") {
    for (Suite s : {Suite::theorem_main, Suite::p_identities, Suite::lemmas,
                    Suite::structural, Suite::series})
        CHECK(suite_from_name(suite_name(s)) == s);
    CHECK(!suite_from_name("bogus").has_value());
    CHECK(!suite_from_name("").has_value());
}

TEST_CASE("sequence names round-trip") {
    CHECK(sequence_from_name("A002324") == Sequence::a002324);
    CHECK(sequence_from_name("A096936") == Sequence::a096936);
    CHECK(!sequence_from_name("A000001").has_value());
    CHECK(sequence_name(Sequence::a002324) == "A002324");
}

TEST_CASE("report merge sums counts and keeps the smallest counterexample") {
    CheckReport a{"x", 1, 50, 49, 1, Counterexample{30, "3", "4"}};
    CheckReport b{"x", 51, 100, 48, 2, Counterexample{60, "1", "2"}};
    a.merge(b);
    CHECK(a.lo == 1);
    CHECK(a.hi == 100);
    CHECK(a.pass == 97);
    CHECK(a.fail == 3);
    REQUIRE(a.first_counterexample.has_value());
    CHECK(a.first_counterexample->n == 30);

    CheckReport c{"x", 1, 10, 10, 0, std::nullopt};
    CheckReport d{"x", 11, 20, 9, 1, Counterexample{15, "a", "b"}};
    c.merge(d);
    REQUIRE(c.first_counterexample.has_value());
    CHECK(c.first_counterexample->n == 15);
    CHECK(!c.ok());
}

TEST_CASE("all sweep suites pass on a short range") {
    for (Suite s : {Suite::theorem_main, Suite::p_identities, Suite::lemmas,
                    Suite::structural}) {
        VerifyOptions opts;
        opts.hi = 64;
        const auto rep = run_suite(s, opts);
        CHECK(rep.ok());
        CHECK(rep.lo == 1);
        CHECK(rep.hi == 64);
        for (const auto& c : rep.checks) {
            CHECK(c.fail == 0);
            CHECK(c.pass == c.hi - c.lo + 1);
            CHECK(!c.first_counterexample.has_value());
        }
    }
}

TEST_CASE("series suite passes at a small order") {
    VerifyOptions opts;
    opts.order = 8;
    const auto rep = run_suite(Suite::series, opts);
    CHECK(rep.ok());
    CHECK(rep.hi == 8);
    REQUIRE(rep.checks.size() == 2);
    CHECK(rep.checks[0].pass == 9); // t^0 .. t^8
    CHECK(rep.checks[1].pass == 8); // t^1 .. t^8
}

TEST_CASE("worker count does not change the verdict") {
    VerifyOptions one;
    one.hi = 97;
    one.workers = 1;
    VerifyOptions four;
    four.hi = 97;
    four.workers = 4;
    for (Suite s : {Suite::theorem_main, Suite::structural}) {
        const auto a = run_suite(s, one);
        const auto b = run_suite(s, four);
        REQUIRE(a.checks.size() == b.checks.size());
        for (std::size_t i = 0; i < a.checks.size(); ++i) {
            CHECK(a.checks[i].name == b.checks[i].name);
            CHECK(a.checks[i].pass == b.checks[i].pass);
            CHECK(a.checks[i].fail == b.checks[i].fail);
            CHECK(a.checks[i].first_counterexample ==
                  b.checks[i].first_counterexample);
        }
    }
}

TEST_CASE("range validation") {
    VerifyOptions bad;
    bad.lo = 0;
    bad.hi = 10;
    CHECK_THROWS_AS(run_suite(Suite::structural, bad), std::invalid_argument);
    bad.lo = 7;
    bad.hi = 3;
    CHECK_THROWS_AS(run_suite(Suite::structural, bad), std::invalid_argument);
    VerifyOptions workers;
    workers.hi = 10;
    workers.workers = 0;
    CHECK_THROWS_AS(run_suite(Suite::structural, workers), std::invalid_argument);
}

TEST_CASE("sequence values through the polynomial route") {
    for (i64 n = 1; n <= 300; ++n) {
        CHECK(sequence_value_via_poly(Sequence::a002324, n) ==
              sequence_value_closed(Sequence::a002324, n));
        CHECK(sequence_value_via_poly(Sequence::a096936, n) ==
              sequence_value_closed(Sequence::a096936, n));
    }
}

namespace {

std::vector<BFileEntry> synthetic_entries(Sequence s, i64 lo, i64 hi) {
    std::vector<BFileEntry> entries;
    for (i64 n = lo; n <= hi; ++n)
        entries.push_back({n, sequence_value_closed(s, n)});
    return entries;
}

} // namespace

TEST_CASE("oeis_check passes on closed-form entries") {
    const auto entries = synthetic_entries(Sequence::a002324, 1, 200);
    const auto rep = oeis_check(Sequence::a002324, entries);
    CHECK(rep.ok());
    CHECK(rep.lo == 1);
    CHECK(rep.hi == 200);
    CHECK(rep.checked == 200);

    const auto sub = oeis_check(Sequence::a002324, entries, 50, 120);
    CHECK(sub.ok());
    CHECK(sub.checked == 71);
}

TEST_CASE("oeis_check reports a corrupted entry by index") {
    auto entries = synthetic_entries(Sequence::a096936, 1, 150);
    entries[98].value += 1; // n = 99
    const auto rep = oeis_check(Sequence::a096936, entries);
    CHECK(!rep.ok());
    REQUIRE(rep.mismatch.has_value());
    CHECK(rep.mismatch->n == 99);
}

TEST_CASE("oeis_check treats coverage problems as errors, not failures") {
    auto entries = synthetic_entries(Sequence::a002324, 1, 100);
    entries.erase(entries.begin() + 49); // drop n = 50
    CHECK_THROWS_AS(oeis_check(Sequence::a002324, entries),
                    std::runtime_error);

    const auto tail = synthetic_entries(Sequence::a002324, 10, 100);
    CHECK_THROWS_AS(oeis_check(Sequence::a002324, tail, 1, 100),
                    std::runtime_error);
    CHECK_THROWS_AS(oeis_check(Sequence::a002324, tail, 20, 200),
                    std::runtime_error);
    CHECK(oeis_check(Sequence::a002324, tail, 20, 90).ok());
    CHECK(oeis_check(Sequence::a002324, tail).checked == 91);
}
