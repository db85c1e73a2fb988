#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "gpaley/errors.hpp"

// Small exact integer utilities for the desk-scale ranges used throughout
// (q = p^R stays below 2^20, so trial division is plenty).

namespace gpaley {

using std::int64_t;

inline bool is_prime(int64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

/// Distinct prime factors of n, ascending.
inline std::vector<int64_t> prime_factors(int64_t n)
{
    std::vector<int64_t> out;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

/// All positive divisors of n, ascending.
inline std::vector<int64_t> divisors(int64_t n)
{
    std::vector<int64_t> small, large;
    for (int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d)
                large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Divisors of n strictly less than n, ascending.
inline std::vector<int64_t> proper_divisors(int64_t n)
{
    auto all = divisors(n);
    all.pop_back();
    return all;
}

/// b^e with overflow detection.
inline int64_t ipow(int64_t b, int64_t e)
{
    int64_t r = 1;
    for (int64_t i = 0; i < e; ++i) {
        if (b != 0 && r > (int64_t{1} << 62) / (b < 0 ? -b : b))
            throw BoundExceededError("integer power overflows");
        r *= b;
    }
    return r;
}

inline int64_t mod_pow(int64_t b, int64_t e, int64_t m)
{
    int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1)
            r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

/// Writes n = p^R with p prime, R >= 1, if possible.
inline std::optional<std::pair<int64_t, int>> as_prime_power(int64_t n)
{
    if (n < 2)
        return std::nullopt;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int r = 0;
            int64_t m = n;
            while (m % d == 0) {
                m /= d;
                ++r;
            }
            if (m != 1)
                return std::nullopt;
            return std::make_pair(d, r);
        }
    }
    return std::make_pair(n, 1); // n itself prime
}

} // namespace gpaley
