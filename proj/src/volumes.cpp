#include "arithgeo/volumes.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "arithgeo/errors.hpp"
#include "arithgeo/quadfields.hpp"

namespace arithgeo {

LValue dirichlet_L2(i64 delta, double tol) {
    const QuadraticField k(delta);
    if (!(tol > 0.0)) throw PreconditionError("tolerance must be positive");
    const u64 period = static_cast<u64>(delta < 0 ? -delta : delta);

    i64 partial = 0, bound = 0;
    for (u64 n = 1; n <= period; ++n) {
        partial += kronecker(delta, n);
        bound = std::max(bound, partial < 0 ? -partial : partial);
    }
    // sum over n > N of chi(n)/n^2 = sum S(n)(1/n^2 - 1/(n+1)^2) - S(N)/(N+1)^2
    // with |S| <= B, bounded by 2B/(N+1)^2
    const double b = static_cast<double>(bound);
    const u64 n_terms = std::max<u64>(1, static_cast<u64>(std::ceil(std::sqrt(2.0 * b / tol))));

    LValue out;
    out.terms = n_terms;
    out.tail_bound = 2.0 * b / (static_cast<double>(n_terms + 1) * static_cast<double>(n_terms + 1));
    // smallest terms first
    long double sum = 0.0L;
    for (u64 n = n_terms; n >= 1; --n) {
        const int chi = kronecker(delta, n);
        if (chi != 0) {
            const long double nd = static_cast<long double>(n);
            sum += static_cast<long double>(chi) / (nd * nd);
        }
    }
    out.value = static_cast<double>(sum);
    return out;
}

double ExactMultiple::value() const {
    return coefficient.convert_to<double>() * std::pow(std::numbers::pi, pi_power) *
           std::sqrt(static_cast<double>(sqrt_radicand)) * numeric;
}

std::string ExactMultiple::to_string() const {
    std::string s = coefficient.str();
    if (pi_power == 1) s += "*pi";
    else if (pi_power != 0) s += "*pi^" + std::to_string(pi_power);
    if (sqrt_radicand != 1) s += "*sqrt(" + std::to_string(sqrt_radicand) + ")";
    if (numeric != 1.0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", numeric);
        s += std::string("*") + buf;
    }
    return s;
}

ExactMultiple kleinian_covolume(const QuatAlgK& b, double tol) {
    if (b.ram_finite().empty()) throw PreconditionError("matrix algebra has infinite covolume here");
    const u64 abs_delta = static_cast<u64>(-b.delta_k());
    ExactMultiple out;
    BigInt prod = 1;
    for (const auto& prime : b.ram_finite()) prod *= prime.norm() - 1;
    // |delta| sqrt|delta| (pi^2/6) L / (4 pi^2)
    out.coefficient = BigRational(BigInt(abs_delta) * prod, 24);
    out.sqrt_radicand = abs_delta;
    out.numeric = dirichlet_L2(b.delta_k(), tol).value;
    // pull square factors out of the radical
    u64 r = out.sqrt_radicand;
    BigInt outside = 1;
    for (u64 p = 2; p * p <= r; ++p)
        while (r % (p * p) == 0) {
            r /= p * p;
            outside *= p;
        }
    out.sqrt_radicand = r;
    out.coefficient *= BigRational(outside);
    return out;
}

ExactMultiple fuchsian_coarea(const QuatAlgQ& b) {
    if (b.definite()) throw PreconditionError("definite algebra has no Fuchsian group");
    if (b.ram_finite().empty()) throw PreconditionError("matrix algebra gives a non-cocompact group");
    BigInt prod = 1;
    for (u64 p : b.ram_finite()) prod *= p - 1;
    ExactMultiple out;
    out.coefficient = BigRational(prod, 3);
    out.pi_power = 1;
    return out;
}

double theorem_scaling(int n, double v, ScalingLaw law) {
    if (n < 1) throw PreconditionError("n must be positive");
    if (!(v > std::numbers::e)) throw PreconditionError("V must exceed e");
    switch (law) {
        case ScalingLaw::AlgebraCount: {
            const double tau = std::ldexp(1.0, -(2 * n + 1));
            return std::sqrt(v) * std::pow(std::log(v), -(1.0 - tau));
        }
        case ScalingLaw::SurfaceCount: return std::pow(v, 2.0 / 3.0);
    }
    return 0.0;
}

}  // namespace arithgeo
