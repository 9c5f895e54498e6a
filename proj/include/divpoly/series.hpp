// Truncated two-variable series check for the generating product of the
// P-family polynomials:
//   prod_{m>=1} (1-t^m)^2 / ((1-q t^m)(1-q^{-1} t^m))
//     = 1 + (q + q^{-1} - 2) * sum_{n>=1} P_n(q)/q^{n-1} t^n.
// Coefficients in q are exact integer Laurent polynomials. The finite
// cutoff m <= N is exact for every t-coefficient up to t^N, since
// factors with m > N only touch higher orders.
#ifndef DIVPOLY_SERIES_HPP
#define DIVPOLY_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace divpoly {

using i64 = std::int64_t;

// Sparse integer Laurent polynomial in q. No zero coefficients are
// stored.
class QLaurent {
public:
    QLaurent() = default;

    static QLaurent monomial(i64 coeff, i64 exp);

    bool is_zero() const { return terms_.empty(); }
    i64 coeff(i64 exp) const;
    void add_term(i64 coeff, i64 exp);

    i64 min_exp() const; // throws on zero polynomial
    i64 max_exp() const;

    QLaurent& operator+=(const QLaurent& other);
    QLaurent& operator-=(const QLaurent& other);
    QLaurent operator*(const QLaurent& other) const; // naive sparse convolution

    bool is_palindromic() const; // coeff(e) == coeff(lo + hi - e)
    bool all_nonnegative() const;

    const std::map<i64, i64>& terms() const { return terms_; }

    friend bool operator==(const QLaurent&, const QLaurent&) = default;

private:
    std::map<i64, i64> terms_;
};

// Series in t up to a fixed order, each t-coefficient a QLaurent.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    QLaurent& at(int t_power) { return coeffs_.at(static_cast<std::size_t>(t_power)); }
    const QLaurent& at(int t_power) const {
        return coeffs_.at(static_cast<std::size_t>(t_power));
    }

    // Truncate to a lower order.
    TruncatedSeries truncated(int new_order) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<QLaurent> coeffs_;
};

TruncatedSeries truncated_product(const TruncatedSeries& x, const TruncatedSeries& y);

// The product side, truncated at t^order.
TruncatedSeries product_series(int order);

// The sum side: 1 + (q + q^{-1} - 2) sum_n centered-P_n t^n.
TruncatedSeries rhs_series(int order);

struct SeriesMismatch {
    int t_power = 0;
    i64 q_exp = 0;
    i64 lhs_coeff = 0;
    i64 rhs_coeff = 0;
};

// First differing coefficient in (t-power, q-exponent) order, or nullopt
// when equal. Throws std::invalid_argument on order mismatch.
std::optional<SeriesMismatch> first_mismatch(const TruncatedSeries& lhs,
                                             const TruncatedSeries& rhs);
bool series_equal(const TruncatedSeries& lhs, const TruncatedSeries& rhs);

// Exact division by q + q^{-1} - 2. Returns false (and leaves quotient
// empty) when the division has a remainder.
bool divide_by_q_plus_qinv_minus_two(const QLaurent& f, QLaurent& quotient);

// Exploration output only: sum_{n>=1} L_n(q)/q^{n-1} t^n. No product
// form is known for the L family; nothing is asserted about this series.
TruncatedSeries l_family_sum_series(int order);

} // namespace divpoly

#endif
