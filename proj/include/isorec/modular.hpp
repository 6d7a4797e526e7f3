#ifndef ISOREC_MODULAR_HPP
#define ISOREC_MODULAR_HPP

#include "isorec/bigint.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace isorec {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 e, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Throws std::invalid_argument unless p is prime. Moduli are kept below 2^32
/// so sums of two residues and u64 intermediates never wrap.
inline u64 require_prime(u64 p) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p >= (1ULL << 32)) throw std::invalid_argument("prime modulus must be below 2^32");
    return p;
}

inline std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    std::vector<u64> out;
    for (u64 n = lo; n <= hi; ++n)
        if (is_prime(n)) out.push_back(n);
    return out;
}

/// Canonical residue of a (possibly negative) big integer.
inline u64 reduce_mod(const BigInt& v, u64 p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<u64>(r);
}

inline u64 reduce_mod(i64 v, u64 p) {
    i64 r = v % static_cast<i64>(p);
    if (r < 0) r += static_cast<i64>(p);
    return static_cast<u64>(r);
}

/// Inverse of a modulo prime p; a must be nonzero mod p.
inline u64 inv_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) throw std::domain_error("zero has no inverse mod " + std::to_string(p));
    return pow_mod(a, p - 2, p);
}

/// Prime factorization by trial division. Desk-scale inputs only.
inline std::map<u64, unsigned> factor_u64(u64 n) {
    std::map<u64, unsigned> f;
    for (u64 q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            ++f[q];
            n /= q;
        }
    }
    if (n > 1) ++f[n];
    return f;
}

inline u64 euler_phi(u64 n) {
    u64 r = n;
    for (auto [q, e] : factor_u64(n)) r = r / q * (q - 1);
    return r;
}

/// lcm that refuses to overflow.
inline u64 lcm_checked(u64 a, u64 b) {
    if (a == 0 || b == 0) return 0;
    const u64 g = std::gcd(a, b);
    const unsigned __int128 r = static_cast<unsigned __int128>(a / g) * b;
    if (r > UINT64_MAX) throw std::overflow_error("lcm exceeds 64 bits");
    return static_cast<u64>(r);
}

inline u64 pow_checked(u64 base, unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= base;
        if (r > UINT64_MAX) throw std::overflow_error("power exceeds 64 bits");
    }
    return static_cast<u64>(r);
}

/// True iff n = p^a for some a >= 1.
inline bool is_positive_power_of(u64 n, u64 p) {
    if (n < p) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace isorec

#endif // ISOREC_MODULAR_HPP
