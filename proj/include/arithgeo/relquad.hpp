#pragma once

/**
 * @file relquad.hpp
 * @brief Relative quadratic extensions L = k(sqrt(beta)), beta = x + sqrt(delta),
 * of an imaginary quadratic field k.
 *
 * Splitting of degree-one primes of k in L follows Hecke's criterion for
 * odd primes: a prime not dividing beta splits iff beta is a square in the
 * residue field; a prime dividing beta to odd order ramifies. Primes above
 * 2, primes dividing delta, inert primes of k, and zeros of beta of even
 * order are rejected with OutOfScopeError.
 */

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arithgeo/arith.hpp"
#include "arithgeo/quadfields.hpp"

namespace arithgeo {

/// True iff x + sqrt(delta) is a square in Q(sqrt(delta)), delta < 0.
bool beta_is_square_in_k(i64 delta_k, i64 x);

/// Galois test for the quartic field Q(sqrt(x + sqrt(delta))): the norm
/// x^2 - delta is a square (biquadratic) or delta * norm is (cyclic).
bool quartic_is_galois(i64 delta_k, i64 x);

class RelQuadExt {
public:
    /// Throws PreconditionError if delta_k is not a negative fundamental
    /// discriminant or if beta is a square in k.
    RelQuadExt(i64 delta_k, i64 x, bool conjugate = false);

    const QuadraticField& base() const { return base_; }
    i64 delta_k() const { return base_.delta(); }
    i64 x() const { return x_; }
    bool is_conjugate() const { return conjugate_; }

    /// The image of L under complex conjugation.
    RelQuadExt conjugate() const { return RelQuadExt(delta_k(), x_, !conjugate_); }

    /// Norm_{k/Q}(beta) = x^2 - delta; the same for beta and its conjugate.
    i128 beta_norm() const { return static_cast<i128>(x_) * x_ - delta_k(); }

    /// beta reduced at a degree-one odd prime of k (sqrt(delta) -> root).
    u64 beta_residue(const PrimeOfK& prime) const;

    friend bool operator==(const RelQuadExt& a, const RelQuadExt& b) {
        return a.delta_k() == b.delta_k() && a.x_ == b.x_ && a.conjugate_ == b.conjugate_;
    }

private:
    QuadraticField base_;
    i64 x_;
    bool conjugate_;
};

std::string to_string(const RelQuadExt& ext);

/// Monic even quartic, coefficients stored from T^4 down to T^0.
struct QuarticPoly {
    std::array<i128, 5> coeffs{};

    i128 operator[](int degree) const { return coeffs[4 - degree]; }
    u64 eval_mod(u64 t, u64 p) const;
    friend bool operator==(const QuarticPoly&, const QuarticPoly&) = default;
};

std::string to_string(const QuarticPoly& f);

/// T^4 - 2x T^2 + (x^2 - delta). Identical for ext and its conjugate.
QuarticPoly minimal_polynomial(const RelQuadExt& ext);

/// 256 (x^2 - delta) delta^2.
i128 poly_discriminant(const RelQuadExt& ext);

/// 256 (x^2 + |delta|) delta^2, an upper bound for |disc(L)|.
i128 disc_upper_bound(const RelQuadExt& ext);

SplitType splitting_in_L(const RelQuadExt& ext, const PrimeOfK& prime);

/// splitting_in_L at both primes of k above the odd split prime p.
std::vector<std::pair<PrimeOfK, SplitType>> relative_ramification(const RelQuadExt& ext, u64 p);

bool is_galois_over_Q(const RelQuadExt& ext);

enum class Verdict { True, False, Inconclusive };

std::string to_string(Verdict v);

struct CompositumCertificate {
    Verdict verdict = Verdict::Inconclusive;
    /// One entry per extension: a prime of k ramified in L_i and in no other
    /// L_j, L_j' nor in L_i'. Empty where none was found below the bound.
    std::vector<std::optional<PrimeOfK>> witnesses;
    std::string reason;
};

/**
 * Checks that the compositum of L_1..L_n and their conjugates has degree
 * 2^(2n) over k by exhibiting, for each i, a prime of k that ramifies in
 * L_i only. Returns False when some L_i is Galois over Q (then L_i = L_i'
 * and the degree drops), Inconclusive when a witness is missing below
 * search_bound. Throws PreconditionError for mixed bases, conjugate-flagged
 * inputs or duplicate fields.
 */
CompositumCertificate compositum_degree_check(std::span<const RelQuadExt> exts,
                                              u64 search_bound = 1'000'000);

}  // namespace arithgeo
