#pragma once

/**
 * @file primeforge.hpp
 * @brief Primes with prescribed splitting: searches in arithmetic
 * progressions and the choice of q_1..q_{n+1} whose splitting pattern in
 * the real quadratic fields Q(sqrt(p_j)) is diagonal-inert.
 */

#include <span>
#include <vector>

#include "arithgeo/arith.hpp"
#include "arithgeo/quadfields.hpp"

namespace arithgeo {

struct ApPrime {
    u64 prime = 0;
    double linnik_ratio = 0.0;  ///< prime / (n log 2n)
};

/// The n-th smallest prime congruent to a mod q (n >= 1, q >= 2, gcd(a,q) = 1).
ApPrime nth_prime_in_ap(i64 a, u64 q, u64 n);

struct QPrimeSelection {
    std::vector<u64> p;  ///< first n primes = 1 mod 4
    std::vector<u64> q;  ///< q_1..q_n, then q_{n+1}
    /// residues[i][j] = q_i mod p_j; locates each q_i in its CRT class
    std::vector<std::vector<u64>> residues;
    u64 max_q = 0;
    /// log(max q) / (n log n), the empirical exponent in max q <= n^(C n); 0 for n = 1
    double exponent_fit = 0.0;
};

/**
 * q_i (i <= n) is the least odd prime, distinct from earlier choices, with
 * (q_i / p_i) = -1 and (q_i / p_j) = +1 for j != i; q_{n+1} is the least
 * remaining odd prime with (q / p_j) = -1 for all j. Throws SearchExhausted
 * past `ceiling`.
 */
QPrimeSelection select_q_primes(std::size_t n, u64 ceiling = 1'000'000'000'000ULL);

using SplittingMatrix = std::vector<std::vector<SplitType>>;

/// Entry [i][j] is the splitting type of q_i in Q(sqrt(p_j)).
SplittingMatrix verify_splitting_matrix(std::span<const u64> p, std::span<const u64> q);

/// True iff rows 0..n-1 are inert exactly on the diagonal (split elsewhere)
/// and row n is inert everywhere.
bool has_selection_pattern(const SplittingMatrix& m);

}  // namespace arithgeo
