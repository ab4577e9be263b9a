#include "arithgeo/relquad.hpp"

#include <algorithm>
#include <set>

#include "arithgeo/errors.hpp"

namespace arithgeo {

bool beta_is_square_in_k(i64 delta_k, i64 x) {
    // (u + v sqrt(delta))^2 = x + sqrt(delta) forces 2uv = 1 and
    // 4u^4 - 4x u^2 + delta = 0, so u^2 = (x + s)/2 with s^2 = x^2 - delta.
    const i128 norm = static_cast<i128>(x) * x - delta_k;
    if (!is_perfect_square(norm)) return false;
    const i128 s = static_cast<i128>(isqrt(static_cast<u64>(norm)));
    const i128 twice = 2 * (x + s);
    return twice > 0 && is_perfect_square(twice);
}

bool quartic_is_galois(i64 delta_k, i64 x) {
    const i128 norm = static_cast<i128>(x) * x - delta_k;
    return is_perfect_square(norm) || is_perfect_square(norm * delta_k);
}

RelQuadExt::RelQuadExt(i64 delta_k, i64 x, bool conjugate)
    : base_(delta_k), x_(x), conjugate_(conjugate) {
    if (delta_k >= 0) throw PreconditionError("base field must be imaginary quadratic");
    if (x > 3'000'000'000LL || x < -3'000'000'000LL)
        throw PreconditionError("shift x out of supported range");
    if (beta_is_square_in_k(delta_k, x))
        throw PreconditionError("x + sqrt(" + std::to_string(delta_k) + ") is a square in k for x = " +
                                std::to_string(x));
}

u64 RelQuadExt::beta_residue(const PrimeOfK& prime) const {
    const u64 p = prime.p;
    const u64 r = *prime.root;
    const u64 xr = mod_floor(x_, p);
    return conjugate_ ? (xr + p - r) % p : (xr + r) % p;
}

std::string to_string(const RelQuadExt& ext) {
    return "k(sqrt(" + std::to_string(ext.x()) + (ext.is_conjugate() ? " - " : " + ") + "sqrt(" +
           std::to_string(ext.delta_k()) + ")))";
}

u64 QuarticPoly::eval_mod(u64 t, u64 p) const {
    u64 acc = 0;
    for (i128 c : coeffs) acc = (mulmod(acc, t % p, p) + mod_floor(c, p)) % p;
    return acc;
}

std::string to_string(const QuarticPoly& f) {
    std::string s = "T^4";
    auto term = [&](i128 c, const char* mono) {
        if (c == 0) return;
        s += c < 0 ? " - " : " + ";
        const i128 a = c < 0 ? -c : c;
        if (a != 1 || mono[0] == '\0') s += to_string(a);
        s += mono;
    };
    term(f[3], "T^3");
    term(f[2], "T^2");
    term(f[1], "T");
    term(f[0], "");
    return s;
}

QuarticPoly minimal_polynomial(const RelQuadExt& ext) {
    const i128 x = ext.x();
    return QuarticPoly{{1, 0, -2 * x, 0, x * x - ext.delta_k()}};
}

i128 poly_discriminant(const RelQuadExt& ext) {
    const i128 d = ext.delta_k();
    return 256 * ext.beta_norm() * d * d;
}

i128 disc_upper_bound(const RelQuadExt& ext) {
    const i128 x = ext.x();
    const i128 d = ext.delta_k();
    const i128 ad = d < 0 ? -d : d;
    return 256 * (x * x + ad) * d * d;
}

namespace {

void require_degree_one_odd(const RelQuadExt& ext, const PrimeOfK& prime) {
    if (prime.p == 2) throw OutOfScopeError("primes above 2 are outside the splitting criterion");
    if (prime.kind == SplitType::Inert)
        throw OutOfScopeError("inert primes of k are outside the splitting criterion");
    if (prime.kind == SplitType::Ramified || mod_floor(ext.delta_k(), prime.p) == 0)
        throw OutOfScopeError("primes dividing delta_k are outside the splitting criterion");
    const u64 r = *prime.root;
    if (mulmod(r, r, prime.p) != mod_floor(ext.delta_k(), prime.p))
        throw PreconditionError(to_string(prime) + " is not a prime of Q(sqrt(" +
                                std::to_string(ext.delta_k()) + "))");
}

}  // namespace

SplitType splitting_in_L(const RelQuadExt& ext, const PrimeOfK& prime) {
    require_degree_one_odd(ext, prime);
    const u64 p = prime.p;
    const u64 b = ext.beta_residue(prime);
    if (b == 0) {
        // The other prime above p cannot divide beta (it would force p | 1),
        // so the valuation at this prime is that of the norm.
        if (valuation(ext.beta_norm(), p) % 2 == 1) return SplitType::Ramified;
        throw OutOfScopeError("beta has even valuation at " + to_string(prime));
    }
    return jacobi(static_cast<i64>(b), p) == 1 ? SplitType::Split : SplitType::Inert;
}

std::vector<std::pair<PrimeOfK, SplitType>> relative_ramification(const RelQuadExt& ext, u64 p) {
    if (p == 2 || mod_floor(ext.delta_k(), p) == 0)
        throw OutOfScopeError("relative_ramification needs an odd prime not dividing delta_k");
    const auto above = primes_above(ext.base(), p);
    if (above.front().kind != SplitType::Split)
        throw OutOfScopeError(std::to_string(p) + " does not split in k");
    std::vector<std::pair<PrimeOfK, SplitType>> out;
    for (const auto& prime : above) out.emplace_back(prime, splitting_in_L(ext, prime));
    return out;
}

bool is_galois_over_Q(const RelQuadExt& ext) { return quartic_is_galois(ext.delta_k(), ext.x()); }

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

CompositumCertificate compositum_degree_check(std::span<const RelQuadExt> exts, u64 search_bound) {
    if (exts.empty()) throw PreconditionError("compositum_degree_check needs at least one extension");
    std::set<i64> seen;
    for (const auto& e : exts) {
        if (e.delta_k() != exts.front().delta_k())
            throw PreconditionError("extensions must share the base field");
        if (e.is_conjugate()) throw PreconditionError("pass L_i, not L_i'; conjugates are implied");
        if (!seen.insert(e.x()).second)
            throw PreconditionError("duplicate extension x = " + std::to_string(e.x()));
    }

    CompositumCertificate cert;
    cert.witnesses.assign(exts.size(), std::nullopt);
    for (std::size_t i = 0; i < exts.size(); ++i) {
        if (is_galois_over_Q(exts[i])) {
            cert.verdict = Verdict::False;
            cert.reason = "L_" + std::to_string(i + 1) + " is Galois over Q, so it equals its conjugate";
            return cert;
        }
    }

    const auto primes = primes_up_to(search_bound);
    const i64 delta = exts.front().delta_k();
    for (std::size_t i = 0; i < exts.size(); ++i) {
        const i128 norm = exts[i].beta_norm();
        for (u64 p : primes) {
            if (p == 2 || mod_floor(delta, p) == 0 || norm % static_cast<i128>(p) != 0) continue;
            if (valuation(norm, p) % 2 == 0) continue;
            // p | Norm(beta_i) makes delta a square mod p, so p splits in k.
            for (const auto& prime : primes_above(exts[i].base(), p)) {
                if (exts[i].beta_residue(prime) != 0) continue;
                bool isolated = exts[i].conjugate().beta_residue(prime) != 0;
                for (std::size_t j = 0; isolated && j < exts.size(); ++j) {
                    if (j == i) continue;
                    isolated = exts[j].beta_residue(prime) != 0 &&
                               exts[j].conjugate().beta_residue(prime) != 0;
                }
                if (isolated) {
                    cert.witnesses[i] = prime;
                    break;
                }
            }
            if (cert.witnesses[i]) break;
        }
    }
    const bool all = std::all_of(cert.witnesses.begin(), cert.witnesses.end(),
                                 [](const auto& w) { return w.has_value(); });
    cert.verdict = all ? Verdict::True : Verdict::Inconclusive;
    if (!all) cert.reason = "no isolating ramified prime below " + std::to_string(search_bound);
    return cert;
}

}  // namespace arithgeo
