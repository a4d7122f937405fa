#pragma once

/// @file primes.hpp
/// Primality testing and integer factorization on BigInt: trial division for
/// small factors, Miller-Rabin for primality, Pollard-Brent rho for the rest.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include <gporo/rational.hpp>

namespace gporo {

namespace detail {

inline BigInt mulmod(const BigInt& a, const BigInt& b, const BigInt& n) { return (a * b) % n; }

inline BigInt powmod(BigInt base, BigInt e, const BigInt& n) {
    BigInt result = 1;
    base %= n;
    while (e > 0) {
        if ((e & 1) != 0) result = mulmod(result, base, n);
        base = mulmod(base, base, n);
        e >>= 1;
    }
    return result;
}

}  // namespace detail

/// Miller-Rabin with a fixed witness set; deterministic for n < 3.3e24,
/// overwhelmingly reliable beyond.
inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = detail::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

/// Pollard rho; returns a nontrivial factor of an odd composite n.
inline BigInt pollard_rho(const BigInt& n) {
    for (BigInt c = 1;; ++c) {
        BigInt x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            BigInt diff = x > y ? x - y : y - x;
            d = boost::multiprecision::gcd(diff, n);
        }
        if (d != n) return d;  // d == n means the cycle closed; retry with next c
    }
}

inline void factor_into(BigInt n, std::map<BigInt, long long>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

/// Factorization of n >= 1 as sorted (prime, multiplicity) pairs; empty for 1.
inline std::vector<std::pair<BigInt, long long>> factorize(BigInt n) {
    if (n < 1) throw domain_error("factorize requires n >= 1");
    std::map<BigInt, long long> acc;
    auto strip = [&](const BigInt& p) {
        while (n % p == 0) {
            n /= p;
            ++acc[p];
        }
    };
    strip(2);
    strip(3);
    // candidates 6k +- 1; composites are harmless (their prime parts are gone)
    for (BigInt p = 5; p * p <= n && p < 100000; p += 6) {
        strip(p);
        strip(p + 2);
    }
    detail::factor_into(n, acc);
    return {acc.begin(), acc.end()};
}

/// Exponent of p in nonzero n (the p-adic valuation of an integer).
inline long long integer_valuation(BigInt n, const BigInt& p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace gporo
