#pragma once

/**
 * @file quatalg.hpp
 * @brief Quaternion algebras over Q and over imaginary quadratic fields,
 * identified with their ramification sets.
 *
 * Every question asked here (isomorphism, embedding of quadratic fields,
 * base change, recovering the ramification from maximal subfields) factors
 * through Ram(B), so no Hilbert symbols or orders are modelled.
 */

#include <set>
#include <vector>

#include "arithgeo/arith.hpp"
#include "arithgeo/quadfields.hpp"
#include "arithgeo/relquad.hpp"

namespace arithgeo {

/// Quaternion algebra over Q. Invariant: |ram_finite| + definite is even.
class QuatAlgQ {
public:
    QuatAlgQ(std::set<u64> ram_finite, bool definite);

    const std::set<u64>& ram_finite() const { return ram_finite_; }
    bool definite() const { return definite_; }
    bool is_division() const { return !ram_finite_.empty() || definite_; }

    friend bool operator==(const QuatAlgQ&, const QuatAlgQ&) = default;

private:
    std::set<u64> ram_finite_;
    bool definite_;
};

/// Quaternion algebra over an imaginary quadratic field (no real places,
/// so |ram_finite| is even).
class QuatAlgK {
public:
    QuatAlgK(i64 delta_k, std::set<PrimeOfK> ram_finite);

    const QuadraticField& base() const { return base_; }
    i64 delta_k() const { return base_.delta(); }
    const std::set<PrimeOfK>& ram_finite() const { return ram_finite_; }
    bool is_division() const { return !ram_finite_.empty(); }

    /// Product of the norms of the ramified primes.
    u64 disc_norm() const;

    friend bool operator==(const QuatAlgK&, const QuatAlgK&) = default;

private:
    QuadraticField base_;
    std::set<PrimeOfK> ram_finite_;
};

std::string to_string(const QuatAlgQ& b);
std::string to_string(const QuatAlgK& b);

bool is_isomorphic(const QuatAlgQ& a, const QuatAlgQ& b);
/// Throws PreconditionError when the base fields differ.
bool is_isomorphic(const QuatAlgK& a, const QuatAlgK& b);

/// Whether the quadratic field L embeds in B: no ramified place of B splits
/// in L (a definite B additionally needs L imaginary).
bool embeds(const QuatAlgQ& b, const QuadraticField& l);

/// Same criterion over k; propagates OutOfScopeError for primes the
/// relative splitting test does not cover.
bool embeds(const QuatAlgK& b, const RelQuadExt& l);

/// B+ tensor k for indefinite B+: the ramified primes of B+ that split in k
/// contribute both primes above them, the others drop out.
QuatAlgK base_change(const QuatAlgQ& b_plus, i64 delta_k);

struct FuchsianPairing {
    bool admissible = false;
    /// Rational primes p_1..p_r with disc_f(B) = p_1 ... p_r O_k.
    std::vector<u64> primes;
};

/// Whether Ram_f(B) is a union of conjugate pairs over rational primes split
/// in k, which is exactly when B = B+ tensor k for some B+ over Q.
FuchsianPairing fuchsian_admissible(const QuatAlgK& b);

/// Quadratic fields Q(sqrt(D)), 3 <= |D| <= d_bound, that are maximal
/// subfields of some indefinite B+ over Q with B+ tensor k = B. When the
/// pairing has odd size the completing prime is searched among primes
/// <= prime_bound that are inert or ramified in k. Throws PreconditionError
/// unless B is Fuchsian-admissible.
std::vector<i64> admissible_subfields(const QuatAlgK& b, u64 d_bound, u64 prime_bound);

/// Primes p <= prime_bound that split in none of the given fields.
std::set<u64> nonsplit_intersection(std::span<const i64> fields, u64 prime_bound);

struct Recovery {
    std::set<u64> recovered;
    std::vector<i64> fields;  ///< the admissible subfields intersected over
    std::vector<u64> pairing;
    bool contains_pairing = false;
    bool equals_pairing = false;
};

/// Recovers the pairing primes of B from its admissible maximal subfields,
/// truncated at |D| <= d_bound and primes <= prime_bound. Throws
/// BoundStarvation when no admissible field exists below d_bound.
Recovery recover_ramification(const QuatAlgK& b, u64 d_bound, u64 prime_bound);

}  // namespace arithgeo
