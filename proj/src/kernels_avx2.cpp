// AVX2 variants of the dense kernels. Compiled with per-function target
// attributes so the translation unit builds without -mavx2; the runtime
// dispatcher only routes here after checking CPU support.
#include "divpoly/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cassert>
#include <limits>

#define DIVPOLY_AVX2 __attribute__((target("avx2")))

namespace divpoly::kernels::avx2 {

namespace {

DIVPOLY_AVX2 inline i64 hsum4(__m256i v) {
    alignas(32) i64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

} // namespace

DIVPOLY_AVX2 i64 sum(std::span<const i64> a) {
    const std::size_t n = a.size();
    std::size_t j = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; j + 4 <= n; j += 4) {
        acc = _mm256_add_epi64(
            acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + j)));
    }
    i64 total = hsum4(acc);
    for (; j < n; ++j) {
        total += a[j];
    }
    return total;
}

DIVPOLY_AVX2 i64 alternating_sum(std::span<const i64> a) {
    const std::size_t n = a.size();
    std::size_t j = 0;
    // Lane parity inside each aligned block of 4 is fixed (+,-,+,-), so a
    // single accumulator suffices; signs are applied at the reduction.
    __m256i acc = _mm256_setzero_si256();
    for (; j + 4 <= n; j += 4) {
        acc = _mm256_add_epi64(
            acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + j)));
    }
    alignas(32) i64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    i64 total = lanes[0] - lanes[1] + lanes[2] - lanes[3];
    int sign = 1; // j is a multiple of 4 here
    for (; j < n; ++j) {
        total += sign * a[j];
        sign = -sign;
    }
    return total;
}

DIVPOLY_AVX2 void residue_sums(std::span<const i64> a, std::span<i64> out) {
    const std::size_t m = out.size();
    assert(m == 3 || m == 4 || m == 6);
    for (std::size_t r = 0; r < m; ++r) {
        out[r] = 0;
    }
    const std::size_t n = a.size();
    const i64* p = a.data();
    std::size_t j = 0;

    if (m == 4) {
        __m256i acc = _mm256_setzero_si256();
        for (; j + 4 <= n; j += 4) {
            acc = _mm256_add_epi64(
                acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j)));
        }
        alignas(32) i64 lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
        for (int l = 0; l < 4; ++l) {
            out[l] += lanes[l];
        }
    } else {
        // Blocks of 12 cover whole periods of both m = 3 and m = 6, so each
        // of the three vectors per block has a fixed lane-to-residue map.
        __m256i acc0 = _mm256_setzero_si256();
        __m256i acc1 = _mm256_setzero_si256();
        __m256i acc2 = _mm256_setzero_si256();
        for (; j + 12 <= n; j += 12) {
            acc0 = _mm256_add_epi64(
                acc0, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j)));
            acc1 = _mm256_add_epi64(
                acc1, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j + 4)));
            acc2 = _mm256_add_epi64(
                acc2, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j + 8)));
        }
        alignas(32) i64 lanes[12];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc0);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), acc1);
        _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 8), acc2);
        for (std::size_t offset = 0; offset < 12; ++offset) {
            out[offset % m] += lanes[offset];
        }
    }

    std::size_t r = j % m;
    for (; j < n; ++j) {
        out[r] += p[j];
        if (++r == m) {
            r = 0;
        }
    }
}

DIVPOLY_AVX2 void prefix_sum_inplace(std::span<i64> a) {
    const std::size_t n = a.size();
    i64* p = a.data();
    std::size_t j = 0;
    const __m256i zero = _mm256_setzero_si256();
    i64 running = 0;
    for (; j + 4 <= n; j += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
        // In-register inclusive scan over the 4 lanes.
        __m256i s1 = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(2, 1, 0, 0));
        s1 = _mm256_blend_epi32(s1, zero, 0x03); // zero lane 0
        x = _mm256_add_epi64(x, s1);
        __m256i s2 = _mm256_permute4x64_epi64(x, _MM_SHUFFLE(1, 0, 0, 0));
        s2 = _mm256_blend_epi32(s2, zero, 0x0F); // zero lanes 0, 1
        x = _mm256_add_epi64(x, s2);
        x = _mm256_add_epi64(x, _mm256_set1_epi64x(running));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + j), x);
        running = _mm256_extract_epi64(x, 3);
    }
    for (; j < n; ++j) {
        running += p[j];
        p[j] = running;
    }
}

DIVPOLY_AVX2 bool is_palindrome(std::span<const i64> a) {
    const std::size_t n = a.size();
    const i64* p = a.data();
    const std::size_t half = n / 2;
    std::size_t j = 0;
    for (; j + 4 <= half; j += 4) {
        __m256i f = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
        __m256i b = _mm256_loadu_si256(
            reinterpret_cast<const __m256i*>(p + n - 4 - j));
        b = _mm256_permute4x64_epi64(b, _MM_SHUFFLE(0, 1, 2, 3));
        __m256i eq = _mm256_cmpeq_epi64(f, b);
        if (_mm256_movemask_pd(_mm256_castsi256_pd(eq)) != 0xF) {
            return false;
        }
    }
    for (; j < half; ++j) {
        if (p[j] != p[n - 1 - j]) {
            return false;
        }
    }
    return true;
}

DIVPOLY_AVX2 i64 min_value(std::span<const i64> a) {
    const std::size_t n = a.size();
    const i64* p = a.data();
    std::size_t j = 0;
    __m256i best = _mm256_set1_epi64x(std::numeric_limits<i64>::max());
    for (; j + 4 <= n; j += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + j));
        __m256i gt = _mm256_cmpgt_epi64(best, v);
        best = _mm256_blendv_epi8(best, v, gt);
    }
    alignas(32) i64 lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    i64 out = lanes[0];
    for (int l = 1; l < 4; ++l) {
        if (lanes[l] < out) {
            out = lanes[l];
        }
    }
    for (; j < n; ++j) {
        if (p[j] < out) {
            out = p[j];
        }
    }
    return out;
}

} // namespace divpoly::kernels::avx2

#endif // x86_64
