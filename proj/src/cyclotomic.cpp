#include "divpoly/cyclotomic.hpp"

#include <stdexcept>

#include "divpoly/checked.hpp"

namespace divpoly {

namespace {

void check_order(int order) {
    if (order != 1 && order != 2 && order != 3 && order != 4 && order != 6) {
        throw std::invalid_argument("cyclotomic: order must be 1, 2, 3, 4 or 6");
    }
}

} // namespace

CyclotomicValue make_cyclotomic(int order, i64 a, i64 b) {
    check_order(order);
    if ((order == 1 || order == 2) && b != 0) {
        throw std::invalid_argument("cyclotomic: order 1 and 2 values are rational integers");
    }
    return {order, a, b};
}

CyclotomicValue times_zeta(const CyclotomicValue& v) {
    switch (v.order) {
        case 1: return v;
        case 2: return {2, -v.a, 0};
        case 3: return {3, -v.b, checked_sub(v.a, v.b)};
        case 4: return {4, -v.b, v.a};
        case 6: return {6, -v.b, checked_add(v.a, v.b)};
        default: throw std::invalid_argument("cyclotomic: bad order");
    }
}

CyclotomicValue zeta_power(int order, i64 e) {
    check_order(order);
    if (e < 0) {
        throw std::invalid_argument("zeta_power: exponent must be >= 0");
    }
    CyclotomicValue v{order, 1, 0};
    for (i64 i = 0, r = e % order; i < r; ++i) {
        v = times_zeta(v);
    }
    return v;
}

CyclotomicValue cyc_mul(const CyclotomicValue& x, const CyclotomicValue& y) {
    if (x.order != y.order) {
        throw std::invalid_argument("cyc_mul: mixed orders");
    }
    const i64 ac = checked_mul(x.a, y.a);
    const i64 ad = checked_mul(x.a, y.b);
    const i64 bc = checked_mul(x.b, y.a);
    const i64 bd = checked_mul(x.b, y.b);
    switch (x.order) {
        case 1:
        case 2:
            return {x.order, ac, 0};
        case 3:
            return {3, checked_sub(ac, bd), checked_sub(checked_add(ad, bc), bd)};
        case 4:
            return {4, checked_sub(ac, bd), checked_add(ad, bc)};
        case 6:
            return {6, checked_sub(ac, bd), checked_add(checked_add(ad, bc), bd)};
        default:
            throw std::invalid_argument("cyc_mul: bad order");
    }
}

i64 norm_squared(const CyclotomicValue& v) {
    const i64 aa = checked_mul(v.a, v.a);
    const i64 bb = checked_mul(v.b, v.b);
    const i64 ab = checked_mul(v.a, v.b);
    switch (v.order) {
        case 1:
        case 2:
            return aa;
        case 3:
            return checked_add(checked_sub(aa, ab), bb);
        case 4:
            return checked_add(aa, bb);
        case 6:
            return checked_add(checked_add(aa, ab), bb);
        default:
            throw std::invalid_argument("norm_squared: bad order");
    }
}

i64 real_part_doubled(const CyclotomicValue& v) {
    switch (v.order) {
        case 3: return checked_sub(checked_mul(2, v.a), v.b);
        case 6: return checked_add(checked_mul(2, v.a), v.b);
        default:
            throw std::invalid_argument("real_part_doubled: order must be 3 or 6");
    }
}

} // namespace divpoly
