#include "divpoly/qform.hpp"

#include <cassert>
#include <stdexcept>

#include "divpoly/checked.hpp"

namespace divpoly {

i64 form_discriminant(const QuadForm& f) {
    return checked_sub(checked_mul(4, checked_mul(f.a, f.c)), checked_mul(f.b, f.b));
}

namespace {

void check_form(const QuadForm& f) {
    if (f.a <= 0 || form_discriminant(f) <= 0) {
        throw std::invalid_argument("quadform: form must be positive definite");
    }
}

void check_n(i64 n) {
    if (n < 1) {
        throw std::invalid_argument("quadform: n must be >= 1");
    }
}

bool is_perfect_square(i64 m, i64& root) {
    if (m < 0) {
        return false;
    }
    root = integer_sqrt(m);
    return root * root == m;
}

// Solutions x of a x^2 + b x y + c y^2 = n for one fixed y, via
// (2ax + by)^2 = 4an - (4ac - b^2) y^2.
int solutions_for_y(const QuadForm& f, i64 n, i64 disc, i64 y) {
    const i64 m = checked_sub(checked_mul(4, checked_mul(f.a, n)),
                              checked_mul(disc, checked_mul(y, y)));
    i64 s = 0;
    if (!is_perfect_square(m, s)) {
        return 0;
    }
    const i64 two_a = 2 * f.a;
    int count = 0;
    if ((s - f.b * y) % two_a == 0) {
        ++count;
    }
    if (s != 0 && (-s - f.b * y) % two_a == 0) {
        ++count;
    }
    return count;
}

} // namespace

i64 integer_sqrt(i64 n) {
    if (n < 0) {
        throw std::invalid_argument("integer_sqrt: n must be >= 0");
    }
    if (n < 2) {
        return n;
    }
    const int bits = 64 - __builtin_clzll(static_cast<unsigned long long>(n));
    i64 x = i64{1} << ((bits + 1) / 2); // x >= sqrt(n)
    while (true) {
        const i64 y = (x + n / x) / 2;
        if (y >= x) {
            break;
        }
        x = y;
    }
    assert(x * x <= n);
    assert(static_cast<unsigned __int128>(x + 1) * static_cast<unsigned __int128>(x + 1) >
           static_cast<unsigned __int128>(n));
    return x;
}

i64 representation_count(const QuadForm& f, i64 n) {
    check_form(f);
    check_n(n);
    const i64 disc = form_discriminant(f);
    const i64 ybound = integer_sqrt(checked_mul(4, checked_mul(f.a, n)) / disc);
    i64 count = 0;
    for (i64 y = -ybound; y <= ybound; ++y) {
        count += solutions_for_y(f, n, disc, y);
    }
    return count;
}

i64 representation_count_rect(const QuadForm& f, i64 n) {
    check_form(f);
    check_n(n);
    const i64 disc = form_discriminant(f);
    const i64 xbound = integer_sqrt(checked_mul(4, checked_mul(f.c, n)) / disc) + 2;
    const i64 ybound = integer_sqrt(checked_mul(4, checked_mul(f.a, n)) / disc) + 2;
    i64 count = 0;
    for (i64 x = -xbound; x <= xbound; ++x) {
        for (i64 y = -ybound; y <= ybound; ++y) {
            const i64 value = checked_add(
                checked_add(checked_mul(f.a, checked_mul(x, x)),
                            checked_mul(f.b, checked_mul(x, y))),
                checked_mul(f.c, checked_mul(y, y)));
            if (value == n) {
                ++count;
            }
        }
    }
    return count;
}

i64 representation_count_halfplane(const QuadForm& f, i64 n) {
    check_form(f);
    check_n(n);
    const i64 disc = form_discriminant(f);
    const i64 ybound = integer_sqrt(checked_mul(4, checked_mul(f.a, n)) / disc);
    i64 count = solutions_for_y(f, n, disc, 0);
    i64 upper = 0;
    for (i64 y = 1; y <= ybound; ++y) {
        upper += solutions_for_y(f, n, disc, y);
    }
    return count + 2 * upper;
}

} // namespace divpoly
