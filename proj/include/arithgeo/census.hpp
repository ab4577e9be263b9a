#pragma once

/**
 * @file census.hpp
 * @brief Counting engines.
 *
 * The prime set P attached to (k, L_1..L_n) holds the rational primes p
 * that split in k and whose primes of k are nonsplit in every L_i and L_i'.
 * Chebotarev in the compositum gives P density 2^-(2n+1). Squarefree
 * integers supported on P then count like C X (log X)^(tau - 1), and each
 * such d gives one quaternion algebra over k with |disc_f| = d^2.
 *
 * Boundary primes (2, divisors of delta_k and of every Norm(beta_i)) are
 * excluded from P. That shifts counts by O(1) and no asymptotic.
 *
 * Also here: splitting statistics over the family of quadratic fields.
 */

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "arithgeo/arith.hpp"
#include "arithgeo/quatalg.hpp"
#include "arithgeo/relquad.hpp"

namespace arithgeo {

enum class Membership { Member, NonMember, Boundary };

class PrimePredicate {
public:
    /// exts must be non-conjugate extensions of Q(sqrt(delta_k)); may be empty.
    PrimePredicate(i64 delta_k, std::vector<RelQuadExt> exts);

    i64 delta_k() const { return delta_k_; }
    const std::vector<RelQuadExt>& exts() const { return exts_; }

    /// 2^-(2n+1)
    double expected_density() const;
    /// tau for the mean-value asymptotic; equal to expected_density().
    double tau() const { return expected_density(); }

    /// Classification of a prime p (not checked for primality).
    Membership classify(u64 p) const;

    /// Throws BoundaryPrimeError for excluded primes, PreconditionError for
    /// non-primes.
    bool in_P(u64 p) const;

private:
    i64 delta_k_;
    std::vector<RelQuadExt> exts_;
    std::vector<std::pair<i64, i128>> shifts_;  // (x_i, Norm beta_i)
};

/// Membership of every prime up to a limit, computed once and then shared
/// read-only.
class MemberTable {
public:
    MemberTable(const PrimePredicate& pred, u64 limit);

    u64 limit() const { return limit_; }
    bool contains(u64 n) const { return n <= limit_ && bits_[n]; }
    const std::vector<std::uint32_t>& members() const { return members_; }
    /// pi_P(x) for x <= limit
    u64 count_up_to(u64 x) const;

private:
    u64 limit_;
    std::vector<bool> bits_;
    std::vector<std::uint32_t> members_;
};

/// 10^k for 10^k in [from, x], followed by x itself when x is not a power of ten.
std::vector<u64> decade_checkpoints(u64 from, u64 x);

struct DensityRow {
    u64 checkpoint = 0;
    u64 count = 0;
    double ratio = 0.0;  ///< count * log(checkpoint) / checkpoint
};

/// pi_P at each checkpoint (decades from 100 up to X when none are given).
std::vector<DensityRow> prime_density_report(const PrimePredicate& pred, u64 x,
                                             std::span<const u64> checkpoints = {});
std::vector<DensityRow> prime_density_report(const MemberTable& table, std::span<const u64> checkpoints);

enum class CountMode { Sieve, Enumerate };

/// Number of squarefree d, 2 <= d <= X, whose prime factors all lie in P.
u64 count_squarefree_over_P(const PrimePredicate& pred, u64 x, CountMode mode = CountMode::Sieve);

/**
 * The same count at several ascending checkpoints, all <= table.limit().
 * Sieve mode splits [2, max] into `shards` contiguous ranges that run on
 * their own threads; the per-range tallies are merged by addition.
 */
std::vector<u64> squarefree_counts(const MemberTable& table, std::span<const u64> checkpoints,
                                   CountMode mode = CountMode::Sieve, unsigned shards = 1);

struct MeanValueFit {
    double constant = 0.0;              ///< least-squares C
    std::vector<double> normalized;     ///< N(X) / (X (log X)^(tau-1))
    std::vector<double> residuals;      ///< normalized - C
    double max_successive_drift = 0.0;  ///< max |y_{k+1}/y_k - 1|
};

/// Fits N(X) ~ C X (log X)^(tau-1). Needs tau in (0, 1] and at least three
/// checkpoints spanning two decades.
MeanValueFit mean_value_fit(std::span<const std::pair<u64, u64>> counts, double tau);

struct AlgebraCensus {
    u64 x = 0;        ///< bound on |disc_f(B)| (strict)
    u64 d_bound = 0;  ///< largest d with d^2 < x
    std::vector<u64> supports;        ///< the d values, ascending
    std::vector<QuatAlgK> algebras;   ///< one per d
    u64 count = 0;
};

/// Quaternion algebras over k admitting every L_i with disc = p_1..p_r O_k,
/// p_j in P, |disc_f| < x. Each output is checked against embeds() and
/// fuchsian_admissible(); a failed check throws VerificationFailure.
AlgebraCensus algebra_census(i64 delta_k, std::span<const RelQuadExt> exts, u64 x);

struct WoodStats {
    u64 count = 0;
    double predicted = 0.0;
    double ratio = 0.0;  ///< count / predicted (0 when predicted is 0)
};

/// (6/pi^2) x (1/2) prod l/(2l+2) over constrained primes; 0 when a prime is
/// asked to be both split and inert.
double wood_prediction(std::optional<u64> q_split, std::span<const u64> q_inert, u64 x);

/// Imaginary fundamental discriminants |D| <= x with q_split split and each
/// q_inert inert, against the independence prediction.
WoodStats wood_stats(std::optional<u64> q_split, std::span<const u64> q_inert, u64 x);

struct RamificationProbability {
    u64 ramified = 0;
    u64 total = 0;
    double fraction = 0.0;
    double expected = 0.0;  ///< 1/(l+1)
    double ratio = 0.0;     ///< fraction / expected
};

/// Share of fundamental discriminants |D| <= x (both signs) with l | D.
RamificationProbability ramification_probability_check(u64 ell, u64 x);

}  // namespace arithgeo
