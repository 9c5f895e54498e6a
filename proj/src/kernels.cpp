#include "divpoly/kernels.hpp"

#include <cassert>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace divpoly::kernels {

namespace scalar {

i64 sum(std::span<const i64> a) {
    i64 total = 0;
    for (i64 v : a) {
        total += v;
    }
    return total;
}

i64 alternating_sum(std::span<const i64> a) {
    i64 total = 0;
    int sign = 1;
    for (i64 v : a) {
        total += sign * v;
        sign = -sign;
    }
    return total;
}

void residue_sums(std::span<const i64> a, std::span<i64> out) {
    const std::size_t m = out.size();
    assert(m == 3 || m == 4 || m == 6);
    for (std::size_t r = 0; r < m; ++r) {
        out[r] = 0;
    }
    std::size_t r = 0;
    for (i64 v : a) {
        out[r] += v;
        if (++r == m) {
            r = 0;
        }
    }
}

void prefix_sum_inplace(std::span<i64> a) {
    i64 running = 0;
    for (i64& v : a) {
        running += v;
        v = running;
    }
}

bool is_palindrome(std::span<const i64> a) {
    for (std::size_t j = 0, k = a.size(); j + 1 < k; ++j, --k) {
        if (a[j] != a[k - 1]) {
            return false;
        }
    }
    return true;
}

i64 min_value(std::span<const i64> a) {
    i64 best = std::numeric_limits<i64>::max();
    for (i64 v : a) {
        if (v < best) {
            best = v;
        }
    }
    return best;
}

} // namespace scalar

namespace {

struct Ops {
    i64 (*sum)(std::span<const i64>);
    i64 (*alternating_sum)(std::span<const i64>);
    void (*residue_sums)(std::span<const i64>, std::span<i64>);
    void (*prefix_sum_inplace)(std::span<i64>);
    bool (*is_palindrome)(std::span<const i64>);
    i64 (*min_value)(std::span<const i64>);
};

constexpr Ops kScalarOps = {
    &scalar::sum,
    &scalar::alternating_sum,
    &scalar::residue_sums,
    &scalar::prefix_sum_inplace,
    &scalar::is_palindrome,
    &scalar::min_value,
};

#if defined(__x86_64__) || defined(_M_X64)
constexpr Ops kAvx2Ops = {
    &avx2::sum,
    &avx2::alternating_sum,
    &avx2::residue_sums,
    &avx2::prefix_sum_inplace,
    &avx2::is_palindrome,
    &avx2::min_value,
};
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend best_backend() {
    return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

struct Dispatch {
    Backend backend;
    const Ops* ops;
};

Dispatch make_dispatch(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2) {
        return {Backend::avx2, &kAvx2Ops};
    }
#endif
    return {Backend::scalar, &kScalarOps};
}

Dispatch& dispatch() {
    static Dispatch d = make_dispatch(best_backend());
    return d;
}

} // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

Backend active_backend() {
    return dispatch().backend;
}

void force_backend(Backend b) {
    if (!backend_available(b)) {
        throw std::invalid_argument("kernels: backend not available on this CPU");
    }
    dispatch() = make_dispatch(b);
}

void reset_backend() {
    dispatch() = make_dispatch(best_backend());
}

i64 sum(std::span<const i64> a) {
    return dispatch().ops->sum(a);
}

i64 alternating_sum(std::span<const i64> a) {
    return dispatch().ops->alternating_sum(a);
}

void residue_sums(std::span<const i64> a, std::span<i64> out) {
    if (out.size() != 3 && out.size() != 4 && out.size() != 6) {
        throw std::invalid_argument("residue_sums: modulus must be 3, 4 or 6");
    }
    dispatch().ops->residue_sums(a, out);
}

void prefix_sum_inplace(std::span<i64> a) {
    dispatch().ops->prefix_sum_inplace(a);
}

bool is_palindrome(std::span<const i64> a) {
    return dispatch().ops->is_palindrome(a);
}

i64 min_value(std::span<const i64> a) {
    return dispatch().ops->min_value(a);
}

} // namespace divpoly::kernels
