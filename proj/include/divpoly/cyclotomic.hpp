// Exact elements a + b*zeta_m of the rings of integers for
// m in {1, 2, 3, 4, 6}, with zeta_m = exp(2*pi*i/m). Reduction rules:
// zeta3^2 = -1 - zeta3, zeta4^2 = -1, zeta6^2 = zeta6 - 1.
#ifndef DIVPOLY_CYCLOTOMIC_HPP
#define DIVPOLY_CYCLOTOMIC_HPP

#include <cstdint>

namespace divpoly {

using i64 = std::int64_t;

struct CyclotomicValue {
    int order = 1; // 1, 2, 3, 4 or 6
    i64 a = 0;
    i64 b = 0; // must be 0 for order 1 and 2

    friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

// Validated constructor; throws std::invalid_argument on a bad order or
// a nonzero zeta component for order 1 or 2.
CyclotomicValue make_cyclotomic(int order, i64 a, i64 b);

// v * zeta_m.
CyclotomicValue times_zeta(const CyclotomicValue& v);

// zeta_m^e for any e >= 0.
CyclotomicValue zeta_power(int order, i64 e);

// x * y; orders must match.
CyclotomicValue cyc_mul(const CyclotomicValue& x, const CyclotomicValue& y);

// |v|^2 as an exact integer.
i64 norm_squared(const CyclotomicValue& v);

// 2 * Re(v) as an exact integer; orders 3 and 6 only.
i64 real_part_doubled(const CyclotomicValue& v);

} // namespace divpoly

#endif
