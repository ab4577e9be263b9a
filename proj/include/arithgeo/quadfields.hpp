#pragma once

/**
 * @file quadfields.hpp
 * @brief Quadratic fields by fundamental discriminant, and how rational
 * primes factor in them.
 *
 * Prime ideals are kept symbolic: a prime of k above p is the pair
 * (p, r) where r is the image of sqrt(delta) in the residue field. That is
 * enough for every norm and splitting query made elsewhere in the library;
 * no ideal arithmetic is attempted.
 */

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "arithgeo/arith.hpp"

namespace arithgeo {

enum class SplitType { Split, Inert, Ramified };

std::string to_string(SplitType s);

bool is_fundamental_discriminant(i64 d);

class QuadraticField {
public:
    /// Throws PreconditionError unless delta is a fundamental discriminant.
    explicit QuadraticField(i64 delta);

    /// Skips validation; for discriminants produced by the enumerator.
    static QuadraticField trusted(i64 delta) { return QuadraticField(delta, Trusted{}); }

    i64 delta() const { return delta_; }
    bool is_imaginary() const { return delta_ < 0; }

    friend bool operator==(const QuadraticField&, const QuadraticField&) = default;

private:
    struct Trusted {};
    QuadraticField(i64 delta, Trusted) : delta_(delta) {}

    i64 delta_;
};

/// Field discriminant of Q(sqrt(p)) for a prime p.
i64 discriminant_of_sqrt_prime(u64 p);

/**
 * A prime ideal of a quadratic field.
 *
 * For odd p, `root` is the residue r with r^2 = delta (mod p) that
 * sqrt(delta) maps to: one of the two roots when split, 0 when ramified.
 * For p = 2 split (delta = 1 mod 8) the square root does not separate the
 * two primes, so `root` is instead the residue of (1 + sqrt(delta))/2,
 * which is 0 or 1. Inert primes carry no root.
 */
struct PrimeOfK {
    u64 p = 0;
    SplitType kind = SplitType::Inert;
    std::optional<u64> root;

    u64 norm() const { return kind == SplitType::Inert ? p * p : p; }

    friend auto operator<=>(const PrimeOfK&, const PrimeOfK&) = default;
    friend bool operator==(const PrimeOfK&, const PrimeOfK&) = default;
};

std::string to_string(const PrimeOfK& prime);

/// Throws PreconditionError for non-prime p.
SplitType splitting(const QuadraticField& k, u64 p);

/// splitting() without the primality check, for loops over known primes.
SplitType splitting_unchecked(i64 delta, u64 p);

/// Primes of k above p; split primes come back ordered by root.
std::vector<PrimeOfK> primes_above(const QuadraticField& k, u64 p);

struct SplitPrimePrefix {
    std::vector<u64> primes;
    /// p_n / (n log 2n)
    double growth_ratio = 0.0;
};

/// The n smallest primes that split in k (skipping 2 when odd_only).
SplitPrimePrefix split_primes_prefix(const QuadraticField& k, std::size_t n, bool odd_only);

enum class DiscriminantSign { Imaginary, Real, Both };

/// Visits fundamental discriminants with |d| <= x in ascending |d|
/// (negative before positive on ties).
void for_each_fundamental_discriminant(u64 x, DiscriminantSign sign,
                                       const std::function<void(i64)>& visit);

std::vector<i64> enumerate_fundamental_discriminants(u64 x, DiscriminantSign sign);

}  // namespace arithgeo
