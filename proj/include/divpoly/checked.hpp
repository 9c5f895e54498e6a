// Overflow-checked arithmetic. The checks are active whenever asserts
// are (the default build keeps them on); release builds with NDEBUG
// compile down to plain operations. 64-bit signed is wide enough for
// every quantity at the supported scale n <= 1e7.
#ifndef DIVPOLY_CHECKED_HPP
#define DIVPOLY_CHECKED_HPP

#include <cassert>
#include <cstdint>

namespace divpoly {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
    std::int64_t r = 0;
    assert(!__builtin_add_overflow(a, b, &r) && "int64 overflow in add");
    return r;
#else
    return a + b;
#endif
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
    std::int64_t r = 0;
    assert(!__builtin_sub_overflow(a, b, &r) && "int64 overflow in sub");
    return r;
#else
    return a - b;
#endif
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
#ifndef NDEBUG
    std::int64_t r = 0;
    assert(!__builtin_mul_overflow(a, b, &r) && "int64 overflow in mul");
    return r;
#else
    return a * b;
#endif
}

} // namespace divpoly

#endif
