#include "arithgeo/fieldforge.hpp"

#include <algorithm>
#include <cmath>

#include "arithgeo/errors.hpp"

namespace arithgeo {

u64 hensel_sqrt(i64 a, u64 p) {
    if (p == 2 || !is_prime(p)) throw PreconditionError("hensel_sqrt needs an odd prime");
    if (mod_floor(a, p) == 0) throw PreconditionError("p divides a");
    const auto r0 = sqrt_mod_prime(a, p);
    if (!r0) throw PreconditionError(std::to_string(a) + " is not a residue mod " + std::to_string(p));

    // Lift r0 to r0 + p*s with (r0 + p s)^2 = a mod p^2.
    const u64 p2 = p * p;
    const u64 a2 = mod_floor(a, p2);
    const u64 r = *r0;
    const u64 diff = (a2 + p2 - mulmod(r, r, p2)) % p2;  // divisible by p
    const u64 s = mulmod(diff / p, invmod((2 * r) % p, p), p);
    const u64 lifted = (r + p * s) % p2;
    return std::min(lifted, p2 - lifted);
}

ShiftChoice find_xi(i64 delta_k, std::span<const u64> primes, std::size_t index, u64 search_cap) {
    if (index >= primes.size()) throw PreconditionError("find_xi index out of range");
    const u64 pi = primes[index];
    if (pi == 2 || mod_floor(delta_k, pi) == 0 || jacobi(delta_k, pi) != 1)
        throw PreconditionError(std::to_string(pi) + " is not an odd prime split in k");

    ShiftChoice out;
    out.r = hensel_sqrt(delta_k + static_cast<i64>(pi), pi);
    const u64 step = pi * pi;
    for (u64 t = 0; t < search_cap; ++t) {
        const u64 x = out.r + step * t;
        bool ok = true;
        for (std::size_t j = 0; ok && j < primes.size(); ++j) {
            if (j == index) continue;
            const u64 pj = primes[j];
            ok = mulmod(x % pj, x % pj, pj) != mod_floor(delta_k, pj);
        }
        if (ok) {
            out.t = t;
            out.x = static_cast<i64>(x);
            const double pn = static_cast<double>(primes.back());
            out.growth_ratio = static_cast<double>(x) / std::pow(pn, 4.0);
            return out;
        }
    }
    throw SearchExhausted("find_xi: cap exceeded for p = " + std::to_string(pi));
}

std::vector<RelQuadExt> FieldConstruction::extensions() const {
    std::vector<RelQuadExt> out;
    out.reserve(fields.size());
    for (const auto& f : fields) out.push_back(f.ext);
    return out;
}

FieldConstruction construct_fields(i64 delta_k, std::size_t n) {
    if (n == 0) throw PreconditionError("construct_fields needs n >= 1");
    const QuadraticField k(delta_k);
    if (!k.is_imaginary()) throw PreconditionError("construct_fields needs an imaginary quadratic field");

    const auto prefix = split_primes_prefix(k, n, true);
    FieldConstruction out;
    out.delta_k = delta_k;
    out.n = n;
    out.split_prime_ratio = prefix.growth_ratio;

    const double n8 = std::pow(static_cast<double>(n), 8.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto shift = find_xi(delta_k, prefix.primes, i);
        RelQuadExt ext(delta_k, shift.x);
        const i128 bound = disc_upper_bound(ext);
        out.fields.push_back(ConstructedField{ext, prefix.primes[i], shift, bound,
                                              static_cast<double>(bound) / n8, is_galois_over_Q(ext)});
        if (valuation(ext.beta_norm(), prefix.primes[i]) != 1)
            throw VerificationFailure("Norm(beta) not exactly divisible by p_i");
    }

    out.non_galois_certified = true;
    for (const auto& f : out.fields) out.non_galois_certified &= !f.galois;

    const auto exts = out.extensions();
    out.compositum = compositum_degree_check(exts);
    out.compositum_certified = out.compositum.verdict == Verdict::True;

    if (!out.certified())
        throw VerificationFailure("field construction failed certification for delta = " +
                                  std::to_string(delta_k) + ", n = " + std::to_string(n));
    return out;
}

}  // namespace arithgeo
