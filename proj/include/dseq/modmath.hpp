#pragma once

// Exact modular arithmetic over machine integers: modular exponentiation,
// multiplicative orders, LCMs, primality and primitive-root tests. Everything
// here is a pure function; all arguments are validated and violations throw
// std::domain_error (std::overflow_error where a result cannot be represented).

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dseq {

using u64 = std::uint64_t;

// Largest modulus m such that (m-1)^2 still fits in 64 bits.
inline constexpr u64 kMaxModulus = 0xFFFFFFFFull;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

// base^exponent mod modulus by square-and-multiply; intermediates stay below
// modulus^2, which the kMaxModulus guard keeps inside u64.
inline u64 mod_pow(u64 base, u64 exponent, u64 modulus) {
    if (modulus < 2)
        throw std::domain_error("mod_pow: modulus must be >= 2");
    if (modulus > kMaxModulus)
        throw std::domain_error("mod_pow: modulus exceeds exact 64-bit range");
    u64 result = 1 % modulus;
    base %= modulus;
    while (exponent > 0) {
        if (exponent & 1) result = result * base % modulus;
        base = base * base % modulus;
        exponent >>= 1;
    }
    return result;
}

// Smallest d >= 1 with a^d = 1 (mod p). Direct iteration; every input this
// project meets has p well below 2^16 so factoring p-1 would be overkill.
inline u64 multiplicative_order(u64 a, u64 p) {
    if (!is_prime(p))
        throw std::domain_error("multiplicative_order: modulus " + std::to_string(p) + " is not prime");
    a %= p;
    if (a == 0)
        throw std::domain_error("multiplicative_order: undefined for a divisible by p");
    u64 cur = a;
    u64 d = 1;
    while (cur != 1) {
        cur = cur * a % p;
        ++d;
    }
    return d;
}

// Period of the sequence s^j mod p, j = 1, 2, ...; for s divisible by p the
// sequence is constantly zero and the period is taken to be 1.
inline u64 sequence_period(u64 s, u64 p) {
    if (!is_prime(p))
        throw std::domain_error("sequence_period: modulus " + std::to_string(p) + " is not prime");
    if (s % p == 0) return 1;
    return multiplicative_order(s, p);
}

inline u64 lcm_many(std::span<const u64> values) {
    if (values.empty())
        throw std::domain_error("lcm_many: empty input");
    u64 acc = 1;
    for (u64 v : values) {
        if (v == 0)
            throw std::domain_error("lcm_many: values must be positive");
        u64 g = std::gcd(acc, v);
        u64 q = acc / g;
        if (q > UINT64_MAX / v)
            throw std::overflow_error("lcm_many: result exceeds 64 bits");
        acc = q * v;
    }
    return acc;
}

inline u64 lcm_many(const std::vector<u64>& values) {
    return lcm_many(std::span<const u64>(values));
}

inline bool is_primitive_root(u64 a, u64 p) {
    return multiplicative_order(a, p) == p - 1;
}

// A residue a (mod p) with the invariants 0 <= a < p and p an odd prime.
struct Residue {
    u64 value;
    u64 modulus;

    Residue(u64 v, u64 m) : value(v), modulus(m) {
        if (m <= 2 || !is_prime(m))
            throw std::domain_error("Residue: modulus must be an odd prime");
        if (v >= m)
            throw std::domain_error("Residue: value out of range");
    }
};

}  // namespace dseq
