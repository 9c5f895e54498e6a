// Dense int64 array kernels behind the polynomial sweeps. Every kernel
// has a scalar reference implementation and an AVX2 variant selected at
// runtime; the two are equivalence-tested against each other.
#ifndef DIVPOLY_KERNELS_HPP
#define DIVPOLY_KERNELS_HPP

#include <cstdint>
#include <span>

namespace divpoly::kernels {

using i64 = std::int64_t;

enum class Backend {
    scalar,
    avx2,
};

const char* backend_name(Backend b);

// True when the host CPU can run the given backend.
bool backend_available(Backend b);

// Backend currently in use by the dispatched entry points.
Backend active_backend();

// Pin a specific backend (throws std::invalid_argument if unavailable).
// Intended for tests and the kernel equivalence suite.
void force_backend(Backend b);

// Return to automatic selection (best available).
void reset_backend();

// Sum of all elements.
i64 sum(std::span<const i64> a);

// sum of a[j] * (-1)^j, sign of index 0 positive.
i64 alternating_sum(std::span<const i64> a);

// out[r] = sum of a[j] over j = r (mod m) where m = out.size().
// m must be 3, 4 or 6.
void residue_sums(std::span<const i64> a, std::span<i64> out);

// In-place inclusive prefix sum.
void prefix_sum_inplace(std::span<i64> a);

// a[j] == a[size-1-j] for all j.
bool is_palindrome(std::span<const i64> a);

// Minimum element; INT64_MAX on an empty span.
i64 min_value(std::span<const i64> a);

// Scalar reference implementations, always available. These are the
// ground truth the SIMD variants are tested against.
namespace scalar {
i64 sum(std::span<const i64> a);
i64 alternating_sum(std::span<const i64> a);
void residue_sums(std::span<const i64> a, std::span<i64> out);
void prefix_sum_inplace(std::span<i64> a);
bool is_palindrome(std::span<const i64> a);
i64 min_value(std::span<const i64> a);
} // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
i64 sum(std::span<const i64> a);
i64 alternating_sum(std::span<const i64> a);
void residue_sums(std::span<const i64> a, std::span<i64> out);
void prefix_sum_inplace(std::span<i64> a);
bool is_palindrome(std::span<const i64> a);
i64 min_value(std::span<const i64> a);
} // namespace avx2
#endif

} // namespace divpoly::kernels

#endif
