#include "arithgeo/quatalg.hpp"

#include <algorithm>
#include <map>

#include "arithgeo/errors.hpp"

namespace arithgeo {

QuatAlgQ::QuatAlgQ(std::set<u64> ram_finite, bool definite)
    : ram_finite_(std::move(ram_finite)), definite_(definite) {
    for (u64 p : ram_finite_)
        if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    if ((ram_finite_.size() + (definite_ ? 1 : 0)) % 2 != 0)
        throw PreconditionError("ramification set must have even size");
}

QuatAlgK::QuatAlgK(i64 delta_k, std::set<PrimeOfK> ram_finite)
    : base_(delta_k), ram_finite_(std::move(ram_finite)) {
    if (!base_.is_imaginary()) throw PreconditionError("base field must be imaginary quadratic");
    for (const auto& prime : ram_finite_) {
        const auto above = primes_above(base_, prime.p);
        if (std::find(above.begin(), above.end(), prime) == above.end())
            throw PreconditionError(to_string(prime) + " is not a prime of Q(sqrt(" +
                                    std::to_string(delta_k) + "))");
    }
    if (ram_finite_.size() % 2 != 0) throw PreconditionError("ramification set must have even size");
}

u64 QuatAlgK::disc_norm() const {
    u64 n = 1;
    for (const auto& prime : ram_finite_) n *= prime.norm();
    return n;
}

std::string to_string(const QuatAlgQ& b) {
    std::string s = "{";
    for (u64 p : b.ram_finite()) s += (s.size() > 1 ? ", " : "") + std::to_string(p);
    if (b.definite()) s += std::string(s.size() > 1 ? ", " : "") + "inf";
    return s + "}";
}

std::string to_string(const QuatAlgK& b) {
    std::string s = "{";
    for (const auto& prime : b.ram_finite()) s += (s.size() > 1 ? ", " : "") + to_string(prime);
    return s + "}";
}

bool is_isomorphic(const QuatAlgQ& a, const QuatAlgQ& b) { return a == b; }

bool is_isomorphic(const QuatAlgK& a, const QuatAlgK& b) {
    if (a.delta_k() != b.delta_k()) throw PreconditionError("algebras over different base fields");
    return a.ram_finite() == b.ram_finite();
}

bool embeds(const QuatAlgQ& b, const QuadraticField& l) {
    if (b.definite() && !l.is_imaginary()) return false;
    return std::none_of(b.ram_finite().begin(), b.ram_finite().end(),
                        [&](u64 p) { return splitting(l, p) == SplitType::Split; });
}

bool embeds(const QuatAlgK& b, const RelQuadExt& l) {
    if (l.delta_k() != b.delta_k()) throw PreconditionError("L is not an extension of B's base field");
    for (const auto& prime : b.ram_finite()) {
        if (prime.kind != SplitType::Split || prime.p == 2)
            throw OutOfScopeError("cannot decide splitting at " + to_string(prime) +
                                  "; extend search data");
        if (splitting_in_L(l, prime) == SplitType::Split) return false;
    }
    return true;
}

QuatAlgK base_change(const QuatAlgQ& b_plus, i64 delta_k) {
    if (b_plus.definite()) throw PreconditionError("base change needs an indefinite algebra");
    const QuadraticField k(delta_k);
    std::set<PrimeOfK> ram;
    for (u64 p : b_plus.ram_finite()) {
        if (splitting(k, p) != SplitType::Split) continue;
        for (const auto& prime : primes_above(k, p)) ram.insert(prime);
    }
    return QuatAlgK(delta_k, std::move(ram));
}

FuchsianPairing fuchsian_admissible(const QuatAlgK& b) {
    std::map<u64, int> count;
    for (const auto& prime : b.ram_finite()) {
        if (prime.kind != SplitType::Split) return {};
        ++count[prime.p];
    }
    FuchsianPairing out;
    for (const auto& [p, c] : count) {
        if (c != 2) return {};
        out.primes.push_back(p);
    }
    out.admissible = true;
    return out;
}

std::vector<i64> admissible_subfields(const QuatAlgK& b, u64 d_bound, u64 prime_bound) {
    const auto pairing = fuchsian_admissible(b);
    if (!pairing.admissible) throw PreconditionError("B is not a base change from Q");

    std::vector<u64> completing;  // primes inert or ramified in k
    for (u64 q : primes_up_to(prime_bound))
        if (splitting(b.base(), q) != SplitType::Split) completing.push_back(q);
    const bool odd = pairing.primes.size() % 2 == 1;

    std::vector<i64> out;
    if (d_bound < 3) return out;
    for_each_fundamental_discriminant(d_bound, DiscriminantSign::Both, [&](i64 d) {
        for (u64 p : pairing.primes)
            if (splitting_unchecked(d, p) == SplitType::Split) return;
        if (odd && std::none_of(completing.begin(), completing.end(),
                                [&](u64 q) { return splitting_unchecked(d, q) != SplitType::Split; }))
            return;
        out.push_back(d);
    });
    return out;
}

std::set<u64> nonsplit_intersection(std::span<const i64> fields, u64 prime_bound) {
    for (i64 d : fields)
        if (!is_fundamental_discriminant(d)) throw PreconditionError(std::to_string(d) + " is not a field");
    std::set<u64> out;
    for (u64 p : primes_up_to(prime_bound)) {
        const bool survives = std::none_of(fields.begin(), fields.end(), [&](i64 d) {
            return splitting_unchecked(d, p) == SplitType::Split;
        });
        if (survives) out.insert(p);
    }
    return out;
}

Recovery recover_ramification(const QuatAlgK& b, u64 d_bound, u64 prime_bound) {
    Recovery out;
    out.fields = admissible_subfields(b, d_bound, prime_bound);
    if (out.fields.empty())
        throw BoundStarvation("no admissible quadratic field with |D| <= " + std::to_string(d_bound));
    out.pairing = fuchsian_admissible(b).primes;
    out.recovered = nonsplit_intersection(out.fields, prime_bound);
    out.contains_pairing = std::all_of(out.pairing.begin(), out.pairing.end(),
                                       [&](u64 p) { return out.recovered.count(p) > 0; });
    out.equals_pairing =
        out.contains_pairing && out.recovered.size() == out.pairing.size();
    return out;
}

}  // namespace arithgeo
