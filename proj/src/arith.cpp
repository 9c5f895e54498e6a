#include "divpoly/arith.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "divpoly/checked.hpp"

namespace divpoly {

i64 ceil_div(i64 num, i64 den) {
    if (den <= 0) {
        throw std::invalid_argument("ceil_div: denominator must be positive");
    }
    i64 q = num / den;
    if (num % den != 0 && num > 0) {
        ++q;
    }
    return q;
}

i64 floor_div(i64 num, i64 den) {
    if (den <= 0) {
        throw std::invalid_argument("floor_div: denominator must be positive");
    }
    i64 q = num / den;
    if (num % den != 0 && num < 0) {
        --q;
    }
    return q;
}

std::vector<i64> divisors(i64 n) {
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be >= 1");
    }
    std::vector<i64> small, large;
    for (i64 d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

i64 sigma(i64 n) {
    i64 total = 0;
    for (i64 d : divisors(n)) {
        total = checked_add(total, d);
    }
    return total;
}

int chi3(i64 n) {
    if (n < 0) {
        throw std::invalid_argument("chi3: n must be >= 0");
    }
    switch (n % 3) {
        case 0: return 0;
        case 1: return 1;
        default: return -1;
    }
}

i64 divisor_count_mod(i64 n, i64 a, i64 m) {
    if (m < 1) {
        throw std::invalid_argument("divisor_count_mod: modulus must be >= 1");
    }
    i64 r = a % m;
    if (r < 0) {
        r += m;
    }
    i64 count = 0;
    for (i64 d : divisors(n)) {
        if (d % m == r) {
            ++count;
        }
    }
    return count;
}

namespace {

struct ResidueTally {
    i64 d13 = 0;
    i64 d23 = 0;
    i64 d412 = 0;
    i64 d812 = 0;
};

ResidueTally tally_residues(i64 n) {
    ResidueTally t;
    for (i64 d : divisors(n)) {
        switch (d % 3) {
            case 1: ++t.d13; break;
            case 2: ++t.d23; break;
            default: break;
        }
        switch (d % 12) {
            case 4: ++t.d412; break;
            case 8: ++t.d812; break;
            default: break;
        }
    }
    return t;
}

} // namespace

i64 a002324_closed(i64 n) {
    ResidueTally t = tally_residues(n);
    return t.d13 - t.d23;
}

i64 a096936_closed(i64 n) {
    ResidueTally t = tally_residues(n);
    return t.d13 - t.d23 + 2 * (t.d412 - t.d812);
}

i64 convolution_lhs(i64 n) {
    i64 total = 0;
    for (i64 d : divisors(n)) {
        i64 co = n / d;
        int sign = ((co - 1) % 2 == 0 ? 1 : -1) * ((d - 1) % 2 == 0 ? 1 : -1);
        total += sign * chi3(d);
    }
    return total;
}

int sign_halfdiff(i64 n) {
    if (n < 1) {
        throw std::invalid_argument("sign_halfdiff: n must be >= 1");
    }
    int lo = floor_div(n, 3) % 2 == 0 ? 1 : -1;
    int hi = ceil_div(n, 3) % 2 == 0 ? 1 : -1;
    return (lo - hi) / 2;
}

SpfSieve::SpfSieve(i64 limit) {
    if (limit < 1) {
        throw std::invalid_argument("SpfSieve: limit must be >= 1");
    }
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    std::vector<std::uint32_t> primes;
    for (i64 i = 2; i <= limit; ++i) {
        if (spf_[i] == 0) {
            spf_[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            if (p > spf_[i] || i * p > limit) {
                break;
            }
            spf_[i * p] = p;
        }
    }
}

i64 SpfSieve::spf(i64 n) const {
    if (n < 2 || n > limit()) {
        throw std::invalid_argument("SpfSieve::spf: n out of sieve range");
    }
    return spf_[static_cast<std::size_t>(n)];
}

std::vector<std::pair<i64, int>> SpfSieve::factorize(i64 n) const {
    if (n < 1 || n > limit()) {
        throw std::invalid_argument("SpfSieve::factorize: n out of sieve range");
    }
    std::vector<std::pair<i64, int>> factors;
    while (n > 1) {
        i64 p = spf_[static_cast<std::size_t>(n)];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        factors.emplace_back(p, e);
    }
    return factors;
}

void SpfSieve::divisors(i64 n, std::vector<i64>& out) const {
    out.clear();
    out.push_back(1);
    for (auto [p, e] : factorize(n)) {
        std::size_t have = out.size();
        i64 pk = 1;
        for (int j = 1; j <= e; ++j) {
            pk *= p;
            for (std::size_t i = 0; i < have; ++i) {
                out.push_back(out[i] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
}

std::vector<i64> SpfSieve::divisors(i64 n) const {
    std::vector<i64> out;
    divisors(n, out);
    return out;
}

} // namespace divpoly
