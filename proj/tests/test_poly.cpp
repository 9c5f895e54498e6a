#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "divpoly/poly.hpp"

using namespace divpoly;

namespace {

// Direct scan oracle: count k in a generous window satisfying
// d/rho - n/d <= k < d - n/(rho d), via cross-multiplied integer
// comparisons (multiply through by rho*d > 0).
struct ScanResult {
    i64 count = 0;
    i64 lo = 0;
    i64 hi = 0;
};

ScanResult scan_window(i64 n, i64 d, Family f) {
    const i64 rho = interval_ratio(f);
    ScanResult r;
    bool any = false;
    for (i64 k = -(n + 2); k <= n + 2; ++k) {
        const bool left = d * d - rho * n <= k * rho * d;
        const bool right = k * rho * d < rho * d * d - n;
        if (left && right) {
            if (!any) r.lo = k;
            any = true;
            r.hi = k + 1;
            r.count += 1;
        }
    }
    return r;
}

std::complex<double> root_of_unity(int m) {
    return std::polar(1.0, 2.0 * M_PI / m);
}

std::complex<double> numeric_eval(const SymmetricLaurentPoly& p, int m) {
    const auto z = root_of_unity(m);
    std::complex<double> acc = 0.0;
    std::complex<double> power = 1.0;
    for (i64 c : p.coeffs()) {
        acc += static_cast<double>(c) * power;
        power *= z;
    }
    return acc;
}

std::complex<double> to_complex(const CyclotomicValue& v) {
    return static_cast<double>(v.a) +
           static_cast<double>(v.b) * root_of_unity(v.order);
}

} // namespace

TEST_CASE("hit_range hand values") {
    CHECK(hit_range(6, 2, Family::L) == HitRange{-2, 1});
    CHECK(hit_count(6, 2, Family::L) == 3);
    CHECK(hit_range(1, 1, Family::L) == HitRange{0, 1});
    CHECK(hit_count(1, 1, Family::L) == 1);
    CHECK(hit_range(2, 2, Family::P) == HitRange{0, 2});
    CHECK(hit_count(2, 2, Family::P) == 2);
    CHECK(hit_range(9, 3, Family::P) == HitRange{-1, 2});
}

TEST_CASE("hit_range rejects bad input") {
    CHECK_THROWS_AS(hit_range(6, 4, Family::L), std::invalid_argument);
    CHECK_THROWS_AS(hit_range(0, 1, Family::L), std::invalid_argument);
    CHECK_THROWS_AS(hit_range(6, 0, Family::P), std::invalid_argument);
    CHECK_THROWS_AS(hit_range(6, -2, Family::P), std::invalid_argument);
}

TEST_CASE("hit_range equals the direct inequality scan") {
    for (i64 n = 1; n <= 300; ++n) {
        for (i64 d : divisors(n)) {
            for (Family f : {Family::P, Family::L}) {
                const auto scan = scan_window(n, d, f);
                const auto r = hit_range(n, d, f);
                CHECK(hit_count(n, d, f) == scan.count);
                if (scan.count > 0) {
                    CHECK(r.lo == scan.lo);
                    CHECK(r.hi == scan.hi);
                }
                // windows stay inside the coefficient support
                CHECK(r.lo >= -(n - 1));
                CHECK(r.hi <= n);
            }
        }
    }
}

TEST_CASE("golden coefficients for n = 6, interval length ln 3") {
    const auto p = build_poly(6, Family::L);
    const std::vector<i64> want{1, 1, 1, 2, 2, 2, 2, 2, 1, 1, 1};
    CHECK(std::vector<i64>(p.coeffs().begin(), p.coeffs().end()) == want);
    CHECK(p.n() == 6);
    CHECK(p.center() == 5);
    CHECK(p.degree() == 10);
}

TEST_CASE("small polynomials, interval length ln 2") {
    auto coeffs = [](const SymmetricLaurentPoly& p) {
        return std::vector<i64>(p.coeffs().begin(), p.coeffs().end());
    };
    CHECK(coeffs(build_poly(1, Family::P)) == std::vector<i64>{1});
    CHECK(coeffs(build_poly(2, Family::P)) == std::vector<i64>{1, 1, 1});
    CHECK(coeffs(build_poly(3, Family::P)) == std::vector<i64>{1, 1, 0, 1, 1});
    CHECK(coeffs(build_poly(4, Family::P)) ==
          std::vector<i64>{1, 1, 1, 1, 1, 1, 1});
    CHECK(coeffs(build_poly(5, Family::P)) ==
          std::vector<i64>{1, 1, 1, 0, 0, 0, 1, 1, 1});
    CHECK(coeffs(build_poly(1, Family::L)) == std::vector<i64>{1});
}

TEST_CASE("coefficient accessor is centered") {
    const auto p = build_poly(3, Family::P); // 1 1 0 1 1 around k = 0
    CHECK(p.coeff(-2) == 1);
    CHECK(p.coeff(-1) == 1);
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(1) == 1);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(3) == 0);
    CHECK(p.coeff(-77) == 0);
}

TEST_CASE("SymmetricLaurentPoly validates its length") {
    CHECK_THROWS_AS(SymmetricLaurentPoly(3, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricLaurentPoly(0, {}), std::invalid_argument);
}

TEST_CASE("divisor-buffer overload matches the plain build") {
    for (i64 n = 1; n <= 300; ++n) {
        const auto divs = divisors(n);
        for (Family f : {Family::P, Family::L}) {
            const auto a = build_poly(n, f);
            const auto b = build_poly(n, f, divs);
            CHECK(std::vector<i64>(a.coeffs().begin(), a.coeffs().end()) ==
                  std::vector<i64>(b.coeffs().begin(), b.coeffs().end()));
        }
    }
}

TEST_CASE("structural invariants on a sample range") {
    for (i64 n = 1; n <= 400; ++n) {
        for (Family f : {Family::P, Family::L}) {
            const auto p = build_poly(n, f);
            CHECK(has_monic_ends(p));
            CHECK(is_palindromic(p));
            CHECK(has_nonnegative_coeffs(p));
        }
    }
}

TEST_CASE("evaluations at hand-checked points") {
    const auto l6 = build_poly(6, Family::L);
    CHECK(eval_at_one(l6) == 16);
    CHECK(eval_at_minus_one(l6) == 0);
    CHECK(eval_cyclotomic(l6, 3) == make_cyclotomic(3, 2, 2));

    CHECK(eval_at_minus_one(build_poly(2, Family::P)) == 1);
    CHECK(eval_at_minus_one(build_poly(5, Family::P)) == 2);
    CHECK(eval_cyclotomic(build_poly(2, Family::P), 4) == make_cyclotomic(4, 0, 1));
    CHECK(eval_cyclotomic(build_poly(2, Family::P), 6) == make_cyclotomic(6, 0, 2));
    CHECK(eval_cyclotomic(build_poly(3, Family::P), 6) == make_cyclotomic(6, 0, 0));
    CHECK(eval_cyclotomic(build_poly(4, Family::P), 6) == make_cyclotomic(6, 1, 0));
    CHECK(eval_cyclotomic(build_poly(1, Family::P), 4) == make_cyclotomic(4, 1, 0));
}

TEST_CASE("sum of coefficients equals sigma for interval length ln 2") {
    for (i64 n = 1; n <= 500; ++n)
        CHECK(eval_at_one(build_poly(n, Family::P)) == sigma(n));
}

TEST_CASE("eval_cyclotomic rejects unsupported orders") {
    const auto p = build_poly(4, Family::P);
    CHECK_THROWS_AS(eval_cyclotomic(p, 1), std::invalid_argument);
    CHECK_THROWS_AS(eval_cyclotomic(p, 2), std::invalid_argument);
    CHECK_THROWS_AS(eval_cyclotomic(p, 5), std::invalid_argument);
    CHECK_THROWS_AS(eval_cyclotomic(p, 12), std::invalid_argument);
}

TEST_CASE("exact cyclotomic evaluation matches the numeric oracle") {
    for (i64 n = 1; n <= 300; ++n) {
        for (Family f : {Family::P, Family::L}) {
            const auto p = build_poly(n, f);
            for (int m : {3, 4, 6}) {
                const auto exact = eval_cyclotomic(p, m);
                const auto numeric = numeric_eval(p, m);
                CHECK(std::abs(to_complex(exact) - numeric) < 1e-6);
            }
            CHECK(static_cast<double>(eval_at_minus_one(p)) ==
                  doctest::Approx(numeric_eval(p, 2).real()).epsilon(1e-9));
        }
    }
}

TEST_CASE("streaming evaluation agrees with construction") {
    for (i64 n = 1; n <= 400; ++n) {
        const auto divs = divisors(n);
        for (Family f : {Family::P, Family::L}) {
            const auto p = build_poly(n, f, divs);
            CHECK(eval_at_one_direct(n, f, divs) == eval_at_one(p));
            CHECK(eval_at_minus_one_direct(n, f, divs) == eval_at_minus_one(p));
            for (int m : {3, 4, 6})
                CHECK(eval_cyclotomic_direct(n, f, m, divs) ==
                      eval_cyclotomic(p, m));
        }
    }
    // convenience overloads without a divisor list
    CHECK(eval_at_one_direct(360, Family::L) ==
          eval_at_one(build_poly(360, Family::L)));
    CHECK(eval_at_minus_one_direct(360, Family::P) ==
          eval_at_minus_one(build_poly(360, Family::P)));
    CHECK(eval_cyclotomic_direct(255, Family::L, 6) ==
          eval_cyclotomic(build_poly(255, Family::L), 6));
}
