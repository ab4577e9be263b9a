#include "arithgeo/quadfields.hpp"

#include <cmath>

#include "arithgeo/errors.hpp"

namespace arithgeo {

std::string to_string(SplitType s) {
    switch (s) {
        case SplitType::Split: return "split";
        case SplitType::Inert: return "inert";
        case SplitType::Ramified: return "ramified";
    }
    return "?";
}

bool is_fundamental_discriminant(i64 d) {
    if (d == 0 || d == 1) return false;
    const u64 a = static_cast<u64>(d < 0 ? -d : d);
    const u64 r = mod_floor(d, 4);
    if (r == 1) return is_squarefree(a);
    if (r != 0) return false;
    const i64 m = d / 4;
    const u64 mr = mod_floor(m, 4);
    return (mr == 2 || mr == 3) && is_squarefree(a / 4);
}

QuadraticField::QuadraticField(i64 delta) : delta_(delta) {
    if (!is_fundamental_discriminant(delta))
        throw PreconditionError(std::to_string(delta) + " is not a fundamental discriminant");
}

i64 discriminant_of_sqrt_prime(u64 p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if (p == 2) return 8;
    return p % 4 == 1 ? static_cast<i64>(p) : 4 * static_cast<i64>(p);
}

std::string to_string(const PrimeOfK& prime) {
    std::string s = "(" + std::to_string(prime.p) + ", ";
    if (prime.kind == SplitType::Inert) return s + "inert)";
    if (prime.kind == SplitType::Ramified) return s + "ramified)";
    return s + std::to_string(*prime.root) + ")";
}

SplitType splitting(const QuadraticField& k, u64 p) {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    return splitting_unchecked(k.delta(), p);
}

SplitType splitting_unchecked(i64 d, u64 p) {
    if (mod_floor(d, p) == 0) return SplitType::Ramified;
    if (p == 2) return mod_floor(d, 8) == 1 ? SplitType::Split : SplitType::Inert;
    return jacobi(d, p) == 1 ? SplitType::Split : SplitType::Inert;
}

std::vector<PrimeOfK> primes_above(const QuadraticField& k, u64 p) {
    const SplitType kind = splitting(k, p);
    switch (kind) {
        case SplitType::Inert:
            return {PrimeOfK{p, kind, std::nullopt}};
        case SplitType::Ramified:
            return {PrimeOfK{p, kind, u64{0}}};
        case SplitType::Split:
            break;
    }
    if (p == 2) {
        // x^2 - x + (1 - delta)/4 = x^2 + x (mod 2): roots 0 and 1
        return {PrimeOfK{2, kind, u64{0}}, PrimeOfK{2, kind, u64{1}}};
    }
    const u64 r = *sqrt_mod_prime(k.delta(), p);
    return {PrimeOfK{p, kind, r}, PrimeOfK{p, kind, p - r}};
}

SplitPrimePrefix split_primes_prefix(const QuadraticField& k, std::size_t n, bool odd_only) {
    if (n == 0) throw PreconditionError("split_primes_prefix needs n >= 1");
    SplitPrimePrefix out;
    for (u64 p = odd_only ? 3 : 2; out.primes.size() < n; p = next_prime(p)) {
        if (splitting(k, p) == SplitType::Split) out.primes.push_back(p);
    }
    const double nn = static_cast<double>(n);
    out.growth_ratio = static_cast<double>(out.primes.back()) / (nn * std::log(2.0 * nn));
    return out;
}

void for_each_fundamental_discriminant(u64 x, DiscriminantSign sign,
                                       const std::function<void(i64)>& visit) {
    const auto sf = squarefree_map(x);
    const bool neg = sign != DiscriminantSign::Real;
    const bool pos = sign != DiscriminantSign::Imaginary;
    for (u64 a = 3; a <= x; ++a) {
        // d = +-a; fundamental iff (d = 1 mod 4, a squarefree) or
        // (a = 4m, d/4 = 2,3 mod 4, m squarefree)
        const u64 ar = a % 4;
        if (ar == 1 || ar == 3) {
            if (!sf[a]) continue;
            // -a = 1 mod 4 iff a = 3 mod 4
            if (neg && ar == 3) visit(-static_cast<i64>(a));
            if (pos && ar == 1) visit(static_cast<i64>(a));
        } else if (ar == 0) {
            const u64 m = a / 4;
            if (!sf[m]) continue;
            const u64 mr = m % 4;
            // -m mod 4: m=1 -> 3, m=2 -> 2, m=3 -> 1
            if (neg && (mr == 1 || mr == 2)) visit(-static_cast<i64>(a));
            if (pos && (mr == 2 || mr == 3)) visit(static_cast<i64>(a));
        }
    }
}

std::vector<i64> enumerate_fundamental_discriminants(u64 x, DiscriminantSign sign) {
    if (x < 3) throw PreconditionError("enumerate_fundamental_discriminants needs x >= 3");
    std::vector<i64> out;
    for_each_fundamental_discriminant(x, sign, [&](i64 d) { out.push_back(d); });
    return out;
}

}  // namespace arithgeo
