#pragma once

/**
 * @file arith.hpp
 * @brief Word-size modular arithmetic and small sieves.
 *
 * Everything here works on 64-bit operands with 128-bit intermediates.
 * Primality is the deterministic Miller-Rabin variant (bases up to 37),
 * which is exact for all n < 2^64.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace arithgeo {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

u64 powmod(u64 base, u64 exp, u64 m);

/// Reduce a signed value into [0, m).
inline u64 mod_floor(i128 a, u64 m) {
    i128 r = a % static_cast<i128>(m);
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

bool is_prime(u64 n);

/// Jacobi symbol (a/n) for odd n > 0.
int jacobi(i64 a, u64 n);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(i64 a, u64 n);

/// Square root of a modulo an odd prime p (Tonelli-Shanks). The smaller of
/// the two roots is returned; nullopt when a is a non-residue.
std::optional<u64> sqrt_mod_prime(i64 a, u64 p);

/// Modular inverse, assuming gcd(a, m) = 1.
u64 invmod(u64 a, u64 m);

u64 isqrt(u64 n);
bool is_perfect_square(i128 n);
bool is_squarefree(u64 n);

/// Exponent of p in n (n != 0).
int valuation(i128 n, u64 p);

/// Primes <= limit, ascending.
std::vector<std::uint32_t> primes_up_to(u64 limit);

/// Byte map: entry i is 1 iff i is prime (0 <= i <= limit).
std::vector<std::uint8_t> prime_map(u64 limit);

/// Byte map: entry i is 1 iff i is squarefree (1 <= i <= limit; entry 0 is 0).
std::vector<std::uint8_t> squarefree_map(u64 limit);

u64 next_prime(u64 n);

/// Calls visit(p) for every prime p <= limit in ascending order, using a
/// segmented sieve so memory stays O(sqrt(limit)).
void for_each_prime(u64 limit, const std::function<void(u64)>& visit);

std::string to_string(i128 v);

}  // namespace arithgeo
