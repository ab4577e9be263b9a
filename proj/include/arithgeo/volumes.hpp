#pragma once

/**
 * @file volumes.hpp
 * @brief Covolumes of maximal-order unit groups and the L-values they need.
 *
 * zeta_k(2) = zeta(2) L(2, chi_delta) with zeta(2) = pi^2/6 in closed form, so
 * the only numerical sum is L(2, chi_delta). Volumes are kept as an exact
 * rational times pi^a times sqrt(m) times one numeric factor until the
 * caller asks for a double.
 */

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "arithgeo/arith.hpp"
#include "arithgeo/quatalg.hpp"

namespace arithgeo {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

struct LValue {
    double value = 0.0;
    u64 terms = 0;           ///< number of summed terms N
    double tail_bound = 0.0; ///< proven bound on |L - partial sum|
};

/**
 * L(2, chi_delta) = sum chi(n)/n^2. Partial sums of chi are bounded by
 * B = max over one period, so the tail after N terms is at most
 * 2B/(N+1)^2 by partial summation; N is the least value making that <= tol.
 */
LValue dirichlet_L2(i64 delta, double tol);

/// coefficient * pi^pi_power * sqrt(sqrt_radicand) * numeric
struct ExactMultiple {
    BigRational coefficient{1};
    int pi_power = 0;
    u64 sqrt_radicand = 1;
    double numeric = 1.0;

    double value() const;
    std::string to_string() const;
};

/// |delta|^(3/2) zeta_k(2)/(4 pi^2) prod (N(p) - 1); pi cancels. Matrix
/// algebras (empty ramification) are rejected.
ExactMultiple kleinian_covolume(const QuatAlgK& b, double tol = 1e-12);

/// (pi/3) prod (p - 1) for an indefinite division algebra over Q.
ExactMultiple fuchsian_coarea(const QuatAlgQ& b);

enum class ScalingLaw {
    AlgebraCount,   ///< V^(1/2) (log V)^-(1 - 2^-(2n+1))
    SurfaceCount,   ///< V^(2/3), n^(-cn) factor left symbolic
};

double theorem_scaling(int n, double v, ScalingLaw law);

}  // namespace arithgeo
