#include "divpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "divpoly/checked.hpp"
#include "divpoly/poly.hpp"
#include "divpoly/qform.hpp"
#include "divpoly/series.hpp"

namespace divpoly {

void CheckReport::merge(const CheckReport& other) {
    lo = std::min(lo, other.lo);
    hi = std::max(hi, other.hi);
    pass = checked_add(pass, other.pass);
    fail = checked_add(fail, other.fail);
    if (other.first_counterexample &&
        (!first_counterexample ||
         other.first_counterexample->n < first_counterexample->n))
        first_counterexample = other.first_counterexample;
}

bool SuiteReport::ok() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckReport& c) { return c.ok(); });
}

std::optional<Suite> suite_from_name(std::string_view name) {
    if (name == "theorem-main") return Suite::theorem_main;
    if (name == "p-identities") return Suite::p_identities;
    if (name == "lemmas") return Suite::lemmas;
    if (name == "structural") return Suite::structural;
    if (name == "series") return Suite::series;
    return std::nullopt;
}

std::string_view suite_name(Suite s) {
    switch (s) {
    case Suite::theorem_main: return "theorem-main";
    case Suite::p_identities: return "p-identities";
    case Suite::lemmas: return "lemmas";
    case Suite::structural: return "structural";
    case Suite::series: return "series";
    }
    return "";
}

i64 suite_default_hi(Suite s) {
    switch (s) {
    case Suite::theorem_main: return 10000;
    case Suite::p_identities: return 2000;
    case Suite::lemmas: return 100000;
    case Suite::structural: return 5000;
    case Suite::series: return 48;
    }
    return 0;
}

namespace {

// The brute alternating-window lemma check costs O(sigma(n)) per n, so
// it sweeps a fixed subrange regardless of how far the suite runs.
constexpr i64 kWindowBruteCap = 2000;

struct CheckAccum {
    i64 pass = 0;
    i64 fail = 0;
    std::optional<Counterexample> first;

    void expect(i64 n, bool ok, const std::string& expected,
                const std::string& actual) {
        if (ok) {
            ++pass;
            return;
        }
        ++fail;
        if (!first || n < first->n) first = Counterexample{n, expected, actual};
    }

    void expect_eq(i64 n, i64 expected, i64 actual) {
        expect(n, expected == actual, std::to_string(expected),
               std::to_string(actual));
    }
};

struct SweepCtx {
    const SpfSieve* sieve = nullptr;
    std::vector<i64> divs;
};

using BodyFn = void (*)(i64 n, SweepCtx& ctx, CheckAccum* checks);

struct CheckDef {
    const char* name;
    i64 cap; // 0: no cap beyond the suite range
};

i64 sum_of(std::span<const i64> xs) {
    return std::accumulate(xs.begin(), xs.end(), i64{0},
                           [](i64 a, i64 b) { return checked_add(a, b); });
}

void theorem_main_body(i64 n, SweepCtx& ctx, CheckAccum* checks) {
    ctx.sieve->divisors(n, ctx.divs);
    const SymmetricLaurentPoly l = build_poly(n, Family::L, ctx.divs);
    const i64 sig = sum_of(ctx.divs);
    const i64 via_one =
        checked_sub(checked_mul(i64{4}, sig), checked_mul(i64{3}, eval_at_one(l)));
    const i64 via_minus_one = eval_at_minus_one(l);
    checks[0].expect_eq(n, a002324_closed(n), via_one);
    checks[1].expect_eq(n, a096936_closed(n), via_minus_one);
    checks[2].expect_eq(n, representation_count({1, 1, 1}, n),
                        checked_mul(i64{6}, via_one));
    checks[3].expect_eq(n, representation_count({1, 0, 3}, n),
                        checked_mul(i64{2}, via_minus_one));
}

void p_identities_body(i64 n, SweepCtx& ctx, CheckAccum* checks) {
    ctx.sieve->divisors(n, ctx.divs);
    const SymmetricLaurentPoly p = build_poly(n, Family::P, ctx.divs);
    checks[0].expect_eq(n, sum_of(ctx.divs), eval_at_one(p));

    const i64 r101 = representation_count({1, 0, 1}, n);
    checks[1].expect_eq(n, r101, checked_mul(i64{4}, eval_at_minus_one(p)));

    const i64 r102 = representation_count({1, 0, 2}, n);
    checks[2].expect_eq(n, checked_mul(r102, r102),
                        checked_mul(i64{4}, norm_squared(eval_cyclotomic(p, 4))));

    checks[3].expect_eq(
        n, representation_count({1, 1, 1}, n),
        checked_mul(i64{3}, real_part_doubled(eval_cyclotomic(p, 3))));

    // |P_n(zeta_6)| = s * r_{1,0,1}(n) with s = 1, 1/4, 1/2 for
    // n = 0, 1, 2 (mod 3); fraction-free: 16 |.|^2 = (4 s r)^2.
    const i64 four_s = n % 3 == 0 ? 4 : (n % 3 == 1 ? 1 : 2);
    const i64 rhs_root = checked_mul(four_s, r101);
    checks[4].expect_eq(n, checked_mul(rhs_root, rhs_root),
                        checked_mul(i64{16}, norm_squared(eval_cyclotomic(p, 6))));
}

void lemmas_body(i64 n, SweepCtx& ctx, CheckAccum* checks) {
    // Rounding defects of n/3: 3 ceil(n/3) - n and n - 3 floor(n/3)
    // follow n mod 3 exactly.
    {
        const i64 up = checked_sub(checked_mul(i64{3}, ceil_div(n, 3)), n);
        const i64 down = checked_sub(n, checked_mul(i64{3}, floor_div(n, 3)));
        const i64 r = n % 3;
        const i64 want_up = r == 0 ? 0 : 3 - r;
        checks[0].expect(n, up == want_up && down == r,
                         "up=" + std::to_string(want_up) +
                             " down=" + std::to_string(r),
                         "up=" + std::to_string(up) +
                             " down=" + std::to_string(down));
    }

    // ((-1)^floor(n/3) - (-1)^ceil(n/3))/2 = (-1)^(n-1) chi3(n).
    {
        const int want = (n % 2 == 1 ? 1 : -1) * chi3(n);
        checks[1].expect_eq(n, want, sign_halfdiff(n));
    }

    // Signed divisor sum against the closed form.
    checks[2].expect_eq(n, (n % 2 == 1 ? 1 : -1) * a096936_closed(n),
                        convolution_lhs(n));

    // Alternating sum over each divisor window equals
    // ((-1)^lo - (-1)^hi)/2, brute loop against closed form.
    if (n <= kWindowBruteCap) {
        ctx.sieve->divisors(n, ctx.divs);
        for (int fi = 0; fi < 2; ++fi) {
            const Family f = fi == 0 ? Family::P : Family::L;
            bool all_ok = true;
            std::string expected, actual;
            for (i64 d : ctx.divs) {
                const HitRange r = hit_range(n, d, f);
                i64 brute = 0;
                int sign = r.lo % 2 == 0 ? 1 : -1;
                for (i64 k = r.lo; k < r.hi; ++k) {
                    brute += sign;
                    sign = -sign;
                }
                const i64 closed = ((r.lo % 2 == 0 ? 1 : -1) -
                                    (r.hi % 2 == 0 ? 1 : -1)) /
                                   2;
                if (brute != closed) {
                    all_ok = false;
                    expected = "d=" + std::to_string(d) +
                               " brute=" + std::to_string(brute);
                    actual = "closed=" + std::to_string(closed);
                    break;
                }
            }
            checks[3 + fi].expect(n, all_ok, expected, actual);
        }
    }
}

void structural_body(i64 n, SweepCtx& ctx, CheckAccum* checks) {
    ctx.sieve->divisors(n, ctx.divs);
    const SymmetricLaurentPoly pp = build_poly(n, Family::P, ctx.divs);
    const SymmetricLaurentPoly pl = build_poly(n, Family::L, ctx.divs);

    auto both = [&](CheckAccum& c, bool ok_p, bool ok_l, const char* what) {
        std::string bad;
        if (!ok_p) bad = "P";
        if (!ok_l) bad += bad.empty() ? "L" : " and L";
        c.expect(n, ok_p && ok_l, what, "violated by family " + bad);
    };
    both(checks[0], has_monic_ends(pp), has_monic_ends(pl),
         "monic ends in both families");
    both(checks[1], is_palindromic(pp), is_palindromic(pl),
         "palindrome in both families");
    both(checks[2], has_nonnegative_coeffs(pp), has_nonnegative_coeffs(pl),
         "nonnegative in both families");

    auto mass_ok = [&](const SymmetricLaurentPoly& p, Family f) {
        return static_cast<i64>(p.coeffs().size()) == 2 * n - 1 &&
               eval_at_one(p) == eval_at_one_direct(n, f, ctx.divs);
    };
    both(checks[3], mass_ok(pp, Family::P), mass_ok(pl, Family::L),
         "2n-1 coefficients carrying the full window mass");
}

struct SuiteDef {
    std::vector<CheckDef> checks;
    BodyFn body;
};

const SuiteDef& suite_def(Suite s) {
    static const SuiteDef theorem{{{"a002324-via-poly", 0},
                                   {"a096936-via-poly", 0},
                                   {"r111-brute-closure", 0},
                                   {"r103-brute-closure", 0}},
                                  theorem_main_body};
    static const SuiteDef pids{{{"at-1-sigma", 0},
                                {"at-minus1-r101", 0},
                                {"at-i-r102", 0},
                                {"at-zeta3-r111", 0},
                                {"at-zeta6-r101", 0}},
                               p_identities_body};
    static const SuiteDef lemmas{{{"ceil-floor-defect", 0},
                                  {"sign-halfdiff-chi3", 0},
                                  {"signed-divisor-convolution", 0},
                                  {"window-alternating-p", kWindowBruteCap},
                                  {"window-alternating-l", kWindowBruteCap}},
                                 lemmas_body};
    static const SuiteDef structural{{{"monic-ends", 0},
                                      {"palindrome", 0},
                                      {"nonnegative", 0},
                                      {"window-mass", 0}},
                                     structural_body};
    switch (s) {
    case Suite::theorem_main: return theorem;
    case Suite::p_identities: return pids;
    case Suite::lemmas: return lemmas;
    case Suite::structural: return structural;
    case Suite::series: break;
    }
    throw std::logic_error("suite has no sweep definition");
}

std::vector<CheckReport> sweep(Suite s, i64 lo, i64 hi, int workers) {
    const SuiteDef& def = suite_def(s);
    const std::size_t ncheck = def.checks.size();
    const SpfSieve sieve(hi);

    std::vector<std::vector<CheckAccum>> acc(
        static_cast<std::size_t>(workers), std::vector<CheckAccum>(ncheck));
    auto run = [&](int w) {
        SweepCtx ctx{&sieve, {}};
        for (i64 n = lo; n <= hi; ++n)
            if (n % workers == w) def.body(n, ctx, acc[static_cast<std::size_t>(w)].data());
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
    }

    std::vector<CheckReport> out(ncheck);
    for (std::size_t i = 0; i < ncheck; ++i) {
        CheckReport& rep = out[i];
        rep.name = def.checks[i].name;
        rep.lo = lo;
        rep.hi = def.checks[i].cap == 0 ? hi : std::min(hi, def.checks[i].cap);
        if (rep.hi < rep.lo) rep.hi = rep.lo - 1; // empty capped range
        for (int w = 0; w < workers; ++w) {
            const CheckAccum& a = acc[static_cast<std::size_t>(w)][i];
            rep.pass += a.pass;
            rep.fail += a.fail;
            if (a.first && (!rep.first_counterexample ||
                            a.first->n < rep.first_counterexample->n))
                rep.first_counterexample = a.first;
        }
    }
    return out;
}

std::string qexp_str(i64 e) { return "q^" + std::to_string(e); }

std::vector<CheckReport> series_checks(int order) {
    std::vector<CheckReport> out(2);
    CheckReport& cmp = out[0];
    cmp.name = "product-vs-sum";
    cmp.lo = 0;
    cmp.hi = order;
    CheckReport& div = out[1];
    div.name = "division-exact";
    div.lo = 1;
    div.hi = order;

    const TruncatedSeries lhs = product_series(order);
    const TruncatedSeries rhs = rhs_series(order);

    const auto mism = first_mismatch(lhs, rhs);
    for (int k = 0; k <= order; ++k) {
        if (mism && mism->t_power == k) {
            cmp.fail += 1;
            if (!cmp.first_counterexample)
                cmp.first_counterexample = Counterexample{
                    k,
                    qexp_str(mism->q_exp) + " coeff " +
                        std::to_string(mism->rhs_coeff),
                    std::to_string(mism->lhs_coeff)};
        } else if (lhs.at(k) == rhs.at(k)) {
            cmp.pass += 1;
        } else {
            cmp.fail += 1; // later mismatch than the reported first
        }
    }

    for (int n = 1; n <= order; ++n) {
        QLaurent quotient;
        const bool exact = divide_by_q_plus_qinv_minus_two(lhs.at(n), quotient);
        bool ok = exact;
        std::string expected = "exact quotient, palindromic, nonnegative";
        std::string actual;
        if (!exact) {
            actual = "nonzero remainder";
        } else if (!quotient.is_palindromic()) {
            ok = false;
            actual = "quotient not palindromic";
        } else if (!quotient.all_nonnegative()) {
            ok = false;
            actual = "negative quotient coefficient";
        }
        div.pass += ok ? 1 : 0;
        div.fail += ok ? 0 : 1;
        if (!ok && !div.first_counterexample)
            div.first_counterexample = Counterexample{n, expected, actual};
    }
    return out;
}

} // namespace

SuiteReport run_suite(Suite s, const VerifyOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteReport rep;
    rep.suite = std::string(suite_name(s));

    if (s == Suite::series) {
        const i64 order = opts.order > 0 ? opts.order : suite_default_hi(s);
        if (order < 1) throw std::invalid_argument("series order must be >= 1");
        if (order > 4096) throw std::invalid_argument("series order too large");
        rep.lo = 0;
        rep.hi = order;
        rep.workers = 1;
        rep.checks = series_checks(static_cast<int>(order));
    } else {
        const i64 lo = opts.lo;
        const i64 hi = opts.hi > 0 ? opts.hi : suite_default_hi(s);
        if (lo < 1 || hi < lo)
            throw std::invalid_argument("range must satisfy 1 <= lo <= hi");
        if (opts.workers < 1 || opts.workers > 4096)
            throw std::invalid_argument("workers must be in [1, 4096]");
        rep.lo = lo;
        rep.hi = hi;
        rep.workers = opts.workers;
        rep.checks = sweep(s, lo, hi, opts.workers);
    }

    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

std::optional<Sequence> sequence_from_name(std::string_view name) {
    if (name == "A002324") return Sequence::a002324;
    if (name == "A096936") return Sequence::a096936;
    return std::nullopt;
}

std::string_view sequence_name(Sequence s) {
    return s == Sequence::a002324 ? "A002324" : "A096936";
}

namespace {

i64 value_via_poly(Sequence s, i64 n, std::span<const i64> divs) {
    const SymmetricLaurentPoly l = build_poly(n, Family::L, divs);
    switch (s) {
    case Sequence::a002324:
        return checked_sub(checked_mul(i64{4}, sum_of(divs)),
                           checked_mul(i64{3}, eval_at_one(l)));
    case Sequence::a096936:
        return eval_at_minus_one(l);
    }
    throw std::logic_error("unknown sequence");
}

} // namespace

i64 sequence_value_via_poly(Sequence s, i64 n) {
    const std::vector<i64> divs = divisors(n);
    return value_via_poly(s, n, divs);
}

i64 sequence_value_closed(Sequence s, i64 n) {
    return s == Sequence::a002324 ? a002324_closed(n) : a096936_closed(n);
}

OeisReport oeis_check(Sequence s, const std::vector<BFileEntry>& entries,
                      i64 lo, i64 hi) {
    const auto t0 = std::chrono::steady_clock::now();
    if (entries.empty()) throw std::runtime_error("b-file has no entries");

    OeisReport rep;
    rep.sequence = std::string(sequence_name(s));
    rep.lo = lo > 0 ? lo : std::max<i64>(1, entries.front().index);
    rep.hi = hi > 0 ? hi : entries.back().index;
    if (rep.lo < 1 || rep.hi < rep.lo)
        throw std::runtime_error("range must satisfy 1 <= lo <= hi");
    if (rep.lo < entries.front().index || rep.hi > entries.back().index)
        throw std::runtime_error(
            "requested range " + std::to_string(rep.lo) + ".." +
            std::to_string(rep.hi) + " outside b-file span " +
            std::to_string(entries.front().index) + ".." +
            std::to_string(entries.back().index));

    // Entries are strictly increasing; walk them in step with n and
    // collect any gaps up front.
    std::size_t at = 0;
    while (at < entries.size() && entries[at].index < rep.lo) ++at;
    std::string gaps;
    int gap_count = 0;
    std::size_t probe = at;
    for (i64 n = rep.lo; n <= rep.hi; ++n) {
        if (probe < entries.size() && entries[probe].index == n) {
            ++probe;
            continue;
        }
        if (gap_count < 8) gaps += (gaps.empty() ? "" : ", ") + std::to_string(n);
        ++gap_count;
    }
    if (gap_count > 0)
        throw std::runtime_error("b-file missing " + std::to_string(gap_count) +
                                 " indices in range: " + gaps +
                                 (gap_count > 8 ? ", ..." : ""));

    const SpfSieve sieve(rep.hi);
    std::vector<i64> divs;
    for (i64 n = rep.lo; n <= rep.hi; ++n, ++at) {
        sieve.divisors(n, divs);
        const i64 computed = value_via_poly(s, n, divs);
        ++rep.checked;
        if (computed != entries[at].value) {
            rep.mismatch = Counterexample{n, std::to_string(entries[at].value),
                                          std::to_string(computed)};
            break;
        }
    }
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

} // namespace divpoly
