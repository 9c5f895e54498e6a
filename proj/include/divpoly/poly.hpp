// Divisor-interval polynomials. For a family ratio rho (2 or 3), the
// coefficient of q^k in F_n(q)/q^(n-1) counts divisors d of n whose
// logarithm falls in the k-th sliding interval of length ln(rho); the
// equivalent exact formulation counts integers k with
//     d/rho - n/d <= k < d - n/(rho d),
// so the whole construction runs in integer arithmetic and no logarithm
// is ever evaluated.
#ifndef DIVPOLY_POLY_HPP
#define DIVPOLY_POLY_HPP

#include <span>
#include <vector>

#include "divpoly/arith.hpp"
#include "divpoly/cyclotomic.hpp"

namespace divpoly {

enum class Family {
    P, // interval length ln 2, rho = 2
    L, // interval length ln 3, rho = 3
};

constexpr int interval_ratio(Family f) { return f == Family::P ? 2 : 3; }
constexpr char family_letter(Family f) { return f == Family::P ? 'P' : 'L'; }

// Half-open window [lo, hi) of interval indices hit by one divisor.
struct HitRange {
    i64 lo = 0;
    i64 hi = 0;
    friend bool operator==(const HitRange&, const HitRange&) = default;
};

// Exact window of k with d/rho - n/d <= k < d - n/(rho d). Requires d | n.
HitRange hit_range(i64 n, i64 d, Family f);

// Number of intervals hit by divisor d, i.e. hi - lo of the window.
i64 hit_count(i64 n, i64 d, Family f);

// Centered coefficient vector of F_n(q)/q^(n-1): coeffs()[j] is the
// coefficient of q^k with k = j - (n-1), j = 0 .. 2n-2.
class SymmetricLaurentPoly {
public:
    SymmetricLaurentPoly(i64 n, std::vector<i64> coeffs);

    i64 n() const { return n_; }
    i64 center() const { return n_ - 1; }
    i64 degree() const { return 2 * (n_ - 1); }
    std::span<const i64> coeffs() const { return coeffs_; }

    // Coefficient of q^k; zero outside [-(n-1), n-1].
    i64 coeff(i64 k) const;

private:
    i64 n_;
    std::vector<i64> coeffs_;
};

// Build F_n for the family by a difference-array range increment per
// divisor followed by one prefix sum.
SymmetricLaurentPoly build_poly(i64 n, Family f);

// Sweep-friendly overload with precomputed ascending divisors of n.
SymmetricLaurentPoly build_poly(i64 n, Family f, std::span<const i64> divs);

// The three structural invariants, checked by tests and the structural
// verification suite.
bool has_monic_ends(const SymmetricLaurentPoly& p);
bool is_palindromic(const SymmetricLaurentPoly& p);
bool has_nonnegative_coeffs(const SymmetricLaurentPoly& p);

// F_n(1): sum of all coefficients.
i64 eval_at_one(const SymmetricLaurentPoly& p);

// F_n(-1), with the q^(n-1) prefactor applied.
i64 eval_at_minus_one(const SymmetricLaurentPoly& p);

// Exact F_n(zeta_order) for order in {3, 4, 6}: coefficient sums per
// exponent residue class, reduced to the (a, b) basis. No rounding.
CyclotomicValue eval_cyclotomic(const SymmetricLaurentPoly& p, int order);

// Streaming evaluation that never materializes the polynomial: each
// divisor contributes a closed-form range sum per residue class, so a
// single value costs O(tau(n)). Must agree with the construction path.
i64 eval_at_one_direct(i64 n, Family f);
i64 eval_at_one_direct(i64 n, Family f, std::span<const i64> divs);
i64 eval_at_minus_one_direct(i64 n, Family f);
i64 eval_at_minus_one_direct(i64 n, Family f, std::span<const i64> divs);
CyclotomicValue eval_cyclotomic_direct(i64 n, Family f, int order);
CyclotomicValue eval_cyclotomic_direct(i64 n, Family f, int order,
                                       std::span<const i64> divs);

} // namespace divpoly

#endif
