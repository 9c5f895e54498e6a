#include "divpoly/poly.hpp"

#include <cassert>
#include <stdexcept>

#include "divpoly/checked.hpp"
#include "divpoly/kernels.hpp"

namespace divpoly {

HitRange hit_range(i64 n, i64 d, Family f) {
    if (n < 1) {
        throw std::invalid_argument("hit_range: n must be >= 1");
    }
    if (d < 1 || n % d != 0) {
        throw std::invalid_argument("hit_range: d must divide n");
    }
    const i64 rho = interval_ratio(f);
    const i64 dd = checked_mul(d, d);
    const i64 rd = checked_mul(rho, d);
    const i64 lo = ceil_div(checked_sub(dd, checked_mul(rho, n)), rd);
    const i64 hi = ceil_div(checked_sub(checked_mul(rho, dd), n), rd);
    assert(lo <= hi);
    return {lo, hi};
}

i64 hit_count(i64 n, i64 d, Family f) {
    HitRange r = hit_range(n, d, f);
    return r.hi - r.lo;
}

SymmetricLaurentPoly::SymmetricLaurentPoly(i64 n, std::vector<i64> coeffs)
    : n_(n), coeffs_(std::move(coeffs)) {
    if (n_ < 1) {
        throw std::invalid_argument("SymmetricLaurentPoly: n must be >= 1");
    }
    if (static_cast<i64>(coeffs_.size()) != 2 * n_ - 1) {
        throw std::invalid_argument("SymmetricLaurentPoly: need exactly 2n-1 coefficients");
    }
}

i64 SymmetricLaurentPoly::coeff(i64 k) const {
    if (k < -(n_ - 1) || k > n_ - 1) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(k + n_ - 1)];
}

SymmetricLaurentPoly build_poly(i64 n, Family f) {
    return build_poly(n, f, divisors(n));
}

SymmetricLaurentPoly build_poly(i64 n, Family f, std::span<const i64> divs) {
    if (n < 1) {
        throw std::invalid_argument("build_poly: n must be >= 1");
    }
    const i64 center = n - 1;
    // One extra slot so the decrement at hi = n stays in bounds; the
    // trailing prefix value must come back to zero.
    std::vector<i64> diff(static_cast<std::size_t>(2 * n), 0);
    for (i64 d : divs) {
        HitRange r = hit_range(n, d, f);
        assert(r.lo >= -center && r.hi <= n && "window escapes degree bound");
        diff[static_cast<std::size_t>(r.lo + center)] += 1;
        diff[static_cast<std::size_t>(r.hi + center)] -= 1;
    }
    kernels::prefix_sum_inplace(diff);
    assert(diff.back() == 0);
    diff.resize(static_cast<std::size_t>(2 * n - 1));
    return {n, std::move(diff)};
}

bool has_monic_ends(const SymmetricLaurentPoly& p) {
    auto c = p.coeffs();
    return c.front() == 1 && c.back() == 1;
}

bool is_palindromic(const SymmetricLaurentPoly& p) {
    return kernels::is_palindrome(p.coeffs());
}

bool has_nonnegative_coeffs(const SymmetricLaurentPoly& p) {
    return kernels::min_value(p.coeffs()) >= 0;
}

i64 eval_at_one(const SymmetricLaurentPoly& p) {
    return kernels::sum(p.coeffs());
}

// With j = k + (n-1), the prefactor q^(n-1) cancels against the index
// shift at q = -1 and at every root of unity:
//   F_n(q) = q^(n-1) * sum_k c_k q^k = sum_j c_j q^j.
i64 eval_at_minus_one(const SymmetricLaurentPoly& p) {
    return kernels::alternating_sum(p.coeffs());
}

namespace {

void check_eval_order(int order) {
    if (order != 3 && order != 4 && order != 6) {
        throw std::invalid_argument("eval_cyclotomic: order must be 3, 4 or 6");
    }
}

// sum_r s[r] * zeta_m^r reduced to the (1, zeta_m) basis via the power
// tables zeta3^2 = -1 - zeta3, zeta4^2 = -1, zeta6^2 = zeta6 - 1.
CyclotomicValue reduce_residue_sums(int order, std::span<const i64> s) {
    switch (order) {
        case 3:
            return {3, checked_sub(s[0], s[2]), checked_sub(s[1], s[2])};
        case 4:
            return {4, checked_sub(s[0], s[2]), checked_sub(s[1], s[3])};
        case 6:
            return {6,
                    checked_add(checked_sub(checked_sub(s[0], s[2]), s[3]), s[5]),
                    checked_sub(checked_sub(checked_add(s[1], s[2]), s[4]), s[5])};
        default:
            throw std::invalid_argument("reduce_residue_sums: bad order");
    }
}

} // namespace

CyclotomicValue eval_cyclotomic(const SymmetricLaurentPoly& p, int order) {
    check_eval_order(order);
    i64 s[6] = {0, 0, 0, 0, 0, 0};
    kernels::residue_sums(p.coeffs(), std::span<i64>(s, static_cast<std::size_t>(order)));
    return reduce_residue_sums(order, std::span<const i64>(s, 6));
}

i64 eval_at_one_direct(i64 n, Family f) {
    return eval_at_one_direct(n, f, divisors(n));
}

i64 eval_at_one_direct(i64 n, Family f, std::span<const i64> divs) {
    i64 total = 0;
    for (i64 d : divs) {
        HitRange r = hit_range(n, d, f);
        total = checked_add(total, r.hi - r.lo);
    }
    return total;
}

i64 eval_at_minus_one_direct(i64 n, Family f) {
    return eval_at_minus_one_direct(n, f, divisors(n));
}

i64 eval_at_minus_one_direct(i64 n, Family f, std::span<const i64> divs) {
    const i64 center = n - 1;
    i64 total = 0;
    for (i64 d : divs) {
        HitRange r = hit_range(n, d, f);
        // Geometric sum of (-1)^j over the shifted window [lo', hi').
        const int slo = ((r.lo + center) & 1) == 0 ? 1 : -1;
        const int shi = ((r.hi + center) & 1) == 0 ? 1 : -1;
        total += (slo - shi) / 2;
    }
    return total;
}

CyclotomicValue eval_cyclotomic_direct(i64 n, Family f, int order) {
    return eval_cyclotomic_direct(n, f, order, divisors(n));
}

CyclotomicValue eval_cyclotomic_direct(i64 n, Family f, int order,
                                       std::span<const i64> divs) {
    check_eval_order(order);
    const i64 m = order;
    const i64 center = n - 1;
    i64 s[6] = {0, 0, 0, 0, 0, 0};
    for (i64 d : divs) {
        HitRange range = hit_range(n, d, f);
        const i64 lo = range.lo + center;
        const i64 hi = range.hi + center;
        for (i64 r = 0; r < m; ++r) {
            // Integers j in [lo, hi) with j = r (mod m).
            s[r] += ceil_div(hi - r, m) - ceil_div(lo - r, m);
        }
    }
    return reduce_residue_sums(order, std::span<const i64>(s, 6));
}

} // namespace divpoly
