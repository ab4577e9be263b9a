#pragma once

/**
 * @file geodesics.hpp
 * @brief Traces, translation lengths, real quadratic units and the quartic
 * norm-one unit search.
 *
 * Lengths are real translation lengths. The rotational part of a loxodromic
 * element is kept apart as `holonomy`, so a hyperbolic element is exactly
 * the case holonomy == 0.
 */

#include <array>
#include <complex>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "arithgeo/arith.hpp"
#include "arithgeo/relquad.hpp"

namespace arithgeo {

using BigInt = boost::multiprecision::cpp_int;

enum class TraceClass { Elliptic, Parabolic, LoxodromicNonHyperbolic, Hyperbolic };

std::string to_string(TraceClass c);

/// Real t in (-2, 2) is elliptic, t = +-2 parabolic, real |t| > 2
/// hyperbolic, anything non-real loxodromic.
TraceClass classify_trace(std::complex<double> t);

struct GeodesicLength {
    double length = 0.0;
    double holonomy = 0.0;  ///< in (-pi, pi]
};

/// From the eigenvalue lambda of z^2 - t z + 1 with |lambda| > 1:
/// length 2 log|lambda|, holonomy 2 arg(lambda). Rejects elliptic and
/// parabolic traces with PreconditionError.
GeodesicLength length_from_trace(std::complex<double> t);

/// True when L is not Galois over Q, so no power of the eigenvalue of a
/// generator is real and the geodesic lies on no totally geodesic surface.
bool surface_obstruction(const RelQuadExt& ext);

/// epsilon = (a + b sqrt(d))/2 > 1, the fundamental unit of discriminant d.
struct RealQuadraticUnit {
    i64 d = 0;
    BigInt a;
    BigInt b;
    int norm = 1;  ///< (a^2 - d b^2)/4
};

RealQuadraticUnit fundamental_unit(i64 d);

/// log(epsilon), accurate for units far beyond double range.
double log_unit(const RealQuadraticUnit& u);

/// 2 log(epsilon_+), where epsilon_+ = epsilon or epsilon^2, whichever has
/// norm +1.
GeodesicLength geodesic_length_real_quadratic(i64 d);

struct HeightLengthBounds {
    BigInt height_bound;  ///< 2^44 3^4 |disc|^2
    BigInt length_bound;  ///< 2^47 3^4 |disc|^2
    std::optional<double> length_over_n16;
};

HeightLengthBounds height_and_length_bounds(const BigInt& abs_disc, std::optional<int> n = std::nullopt);

/**
 * Element c0 + c1 t + c2 t^2 + c3 t^3 of Z[t], t^4 = 2x t^2 - (x^2 - delta),
 * the equation order of the quartic minimal polynomial. t is sqrt(beta).
 */
class QuarticElement {
public:
    QuarticElement(i64 delta_k, i64 x, bool conjugate, std::array<BigInt, 4> coords);
    QuarticElement(const RelQuadExt& ext, const std::array<i64, 4>& coords);

    const std::array<BigInt, 4>& coords() const { return c_; }
    bool lies_in_k() const { return c_[1] == 0 && c_[3] == 0; }

    QuarticElement operator*(const QuarticElement& o) const;
    QuarticElement pow(unsigned m) const;
    friend bool operator==(const QuarticElement& a, const QuarticElement& b) { return a.c_ == b.c_; }

    /// Norm to k as (n0, n1), meaning n0 + n1 sqrt(delta).
    std::pair<BigInt, BigInt> relative_norm() const;

    /// Images under the four complex embeddings.
    std::array<std::complex<double>, 4> conjugates() const;

    /// (1/4) sum log max(1, |sigma(u)|)
    double log_height() const;

    bool is_root_of_unity() const;

private:
    i64 delta_;
    i64 x_;
    bool conj_;
    std::array<BigInt, 4> c_;
};

struct NormOneUnit {
    std::array<i64, 4> coords{};
    double log_height = 0.0;
};

/**
 * Searches the box max|c_i| <= height_cap, shell by shell and then in
 * lexicographic order, for a non-torsion u in the equation order with
 * Norm_{L/k}(u) = 1. An empty result only says the box holds none.
 */
std::optional<NormOneUnit> norm_one_unit_search(const RelQuadExt& ext, u64 height_cap);

}  // namespace arithgeo
