#pragma once

/**
 * @file fieldforge.hpp
 * @brief Builds n quadratic extensions L_i = k(sqrt(x_i + sqrt(delta))) of an
 * imaginary quadratic field such that no L_i is Galois over Q, the
 * compositum of all L_i and L_i' has degree 2^(2n) over k, and |disc L_i|
 * stays polynomial in n.
 *
 * Recipe: take the first n odd primes p_i split in k, let r_i be the least
 * square root of delta + p_i modulo p_i^2, and set x_i = r_i + p_i^2 t_i
 * with t_i >= 0 minimal such that x_i^2 != delta (mod p_j) for j != i.
 * Then Norm(beta_i) is divisible by p_i exactly once, which makes the prime
 * (p_i, x_i + sqrt(delta)) ramify in L_i and nowhere else.
 */

#include <vector>

#include "arithgeo/arith.hpp"
#include "arithgeo/relquad.hpp"

namespace arithgeo {

/// Least r in [0, p^2) with r^2 = a (mod p^2), for odd prime p not dividing a.
u64 hensel_sqrt(i64 a, u64 p);

struct ShiftChoice {
    i64 x = 0;
    u64 r = 0;  ///< least square root of delta + p_i mod p_i^2
    u64 t = 0;  ///< number of p_i^2 steps taken
    double growth_ratio = 0.0;  ///< x / p_n^4
};

/// Chooses x_i for the split primes `primes` (0-based index i).
ShiftChoice find_xi(i64 delta_k, std::span<const u64> primes, std::size_t index,
                    u64 search_cap = 1'000'000);

struct ConstructedField {
    RelQuadExt ext;
    u64 p = 0;
    ShiftChoice shift;
    i128 disc_bound = 0;
    double disc_ratio_n8 = 0.0;  ///< disc_bound / n^8
    bool galois = false;
};

struct FieldConstruction {
    i64 delta_k = 0;
    std::size_t n = 0;
    double split_prime_ratio = 0.0;  ///< p_n / (n log 2n)
    std::vector<ConstructedField> fields;
    CompositumCertificate compositum;
    bool non_galois_certified = false;
    bool compositum_certified = false;

    std::vector<RelQuadExt> extensions() const;
    bool certified() const { return non_galois_certified && compositum_certified; }
};

/// Throws VerificationFailure if any certificate fails.
FieldConstruction construct_fields(i64 delta_k, std::size_t n);

}  // namespace arithgeo
