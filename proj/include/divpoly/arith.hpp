// Exact integer utilities: divisor enumeration and the multiplicative
// closed forms used as cross-check oracles everywhere else.
#ifndef DIVPOLY_ARITH_HPP
#define DIVPOLY_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace divpoly {

using i64 = std::int64_t;

// Ceiling of num/den for den > 0, any sign of num. Throws
// std::invalid_argument on den <= 0. This is the single rounding
// primitive every interval count is built from.
i64 ceil_div(i64 num, i64 den);

// Floor counterpart, same contract.
i64 floor_div(i64 num, i64 den);

// All divisors of n >= 1 in ascending order, by trial division up to
// sqrt(n).
std::vector<i64> divisors(i64 n);

// Sum of divisors of n >= 1.
i64 sigma(i64 n);

// Nonprincipal character mod 3: 0, 1, -1 for n = 0, 1, 2 (mod 3). n >= 0.
int chi3(i64 n);

// Number of divisors d of n with d = a (mod m). n >= 1, m >= 1.
i64 divisor_count_mod(i64 n, i64 a, i64 m);

// d_{1,3}(n) - d_{2,3}(n); equals one sixth of the number of (x, y)
// with x^2 + xy + y^2 = n.
i64 a002324_closed(i64 n);

// d_{1,3}(n) - d_{2,3}(n) + 2 (d_{4,12}(n) - d_{8,12}(n)); equals half
// the number of (x, y) with x^2 + 3 y^2 = n.
i64 a096936_closed(i64 n);

// sum over d | n of (-1)^(n/d - 1) (-1)^(d - 1) chi3(d).
// Always equal to (-1)^(n-1) * a096936_closed(n).
i64 convolution_lhs(i64 n);

// ((-1)^floor(n/3) - (-1)^ceil(n/3)) / 2 in exact integers; always in
// {-1, 0, 1} and equal to (-1)^(n-1) * chi3(n).
int sign_halfdiff(i64 n);

// Smallest-prime-factor sieve for batch sweeps over n in [1, limit].
// Divisor enumeration through the sieve is O(tau(n) log tau(n)) per n
// instead of O(sqrt(n)) trial division.
class SpfSieve {
public:
    explicit SpfSieve(i64 limit);

    i64 limit() const { return static_cast<i64>(spf_.size()) - 1; }
    i64 spf(i64 n) const;
    bool is_prime(i64 n) const { return n >= 2 && spf(n) == n; }

    // (prime, exponent) pairs, primes ascending.
    std::vector<std::pair<i64, int>> factorize(i64 n) const;

    // Ascending divisor list; out is cleared first so callers can reuse
    // the buffer across a sweep.
    void divisors(i64 n, std::vector<i64>& out) const;
    std::vector<i64> divisors(i64 n) const;

private:
    std::vector<std::uint32_t> spf_;
};

} // namespace divpoly

#endif
