#include "arithgeo/census.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <thread>

#include "arithgeo/errors.hpp"

namespace arithgeo {

PrimePredicate::PrimePredicate(i64 delta_k, std::vector<RelQuadExt> exts)
    : delta_k_(delta_k), exts_(std::move(exts)) {
    const QuadraticField k(delta_k);
    if (!k.is_imaginary()) throw PreconditionError("base field must be imaginary quadratic");
    for (const auto& e : exts_) {
        if (e.delta_k() != delta_k) throw PreconditionError("extension over a different base field");
        if (e.is_conjugate()) throw PreconditionError("pass L_i, not L_i'; conjugates are implied");
        shifts_.emplace_back(e.x(), e.beta_norm());
    }
}

double PrimePredicate::expected_density() const {
    return std::ldexp(1.0, -static_cast<int>(2 * exts_.size() + 1));
}

Membership PrimePredicate::classify(u64 p) const {
    if (p == 2 || mod_floor(delta_k_, p) == 0) return Membership::Boundary;
    for (const auto& [x, norm] : shifts_)
        if (mod_floor(norm, p) == 0) return Membership::Boundary;

    const auto r = sqrt_mod_prime(delta_k_, p);
    if (!r) return Membership::NonMember;
    for (const auto& [x, norm] : shifts_) {
        const u64 xr = mod_floor(x, p);
        // beta and beta' at the prime sqrt(delta) -> r; the other prime swaps them
        if (jacobi(static_cast<i64>((xr + *r) % p), p) == 1) return Membership::NonMember;
        if (jacobi(static_cast<i64>((xr + p - *r) % p), p) == 1) return Membership::NonMember;
    }
    return Membership::Member;
}

bool PrimePredicate::in_P(u64 p) const {
    if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
    const auto m = classify(p);
    if (m == Membership::Boundary)
        throw BoundaryPrimeError(std::to_string(p) + " is a boundary prime, excluded by convention");
    return m == Membership::Member;
}

MemberTable::MemberTable(const PrimePredicate& pred, u64 limit) : limit_(limit), bits_(limit + 1, false) {
    if (limit > 0xffffffffULL) throw PreconditionError("member table limit must fit in 32 bits");
    for_each_prime(limit, [&](u64 p) {
        if (pred.classify(p) == Membership::Member) {
            bits_[p] = true;
            members_.push_back(static_cast<std::uint32_t>(p));
        }
    });
}

u64 MemberTable::count_up_to(u64 x) const {
    return static_cast<u64>(std::upper_bound(members_.begin(), members_.end(), x) - members_.begin());
}

std::vector<u64> decade_checkpoints(u64 from, u64 x) {
    std::vector<u64> out;
    u64 c = 1;
    while (c < from) c *= 10;
    for (; c <= x; c *= 10) {
        out.push_back(c);
        if (c > x / 10) break;
    }
    if (out.empty() || out.back() != x) out.push_back(x);
    return out;
}

std::vector<DensityRow> prime_density_report(const MemberTable& table, std::span<const u64> checkpoints) {
    std::vector<DensityRow> rows;
    for (u64 c : checkpoints) {
        if (c > table.limit()) throw PreconditionError("checkpoint beyond member table");
        DensityRow row{c, table.count_up_to(c), 0.0};
        row.ratio = static_cast<double>(row.count) * std::log(static_cast<double>(c)) / static_cast<double>(c);
        rows.push_back(row);
    }
    return rows;
}

std::vector<DensityRow> prime_density_report(const PrimePredicate& pred, u64 x, std::span<const u64> checkpoints) {
    if (x < 100) throw PreconditionError("prime_density_report needs X >= 100");
    std::vector<u64> cps(checkpoints.begin(), checkpoints.end());
    if (cps.empty()) cps = decade_checkpoints(100, x);
    const MemberTable table(pred, x);
    return prime_density_report(table, cps);
}

namespace {

void require_ascending(std::span<const u64> checkpoints, u64 limit) {
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw PreconditionError("checkpoints must be strictly ascending");
        if (checkpoints[i] > limit) throw PreconditionError("checkpoint beyond member table");
    }
}

// Index of the first checkpoint >= d.
std::size_t bin_of(std::span<const u64> checkpoints, u64 d) {
    return static_cast<std::size_t>(std::lower_bound(checkpoints.begin(), checkpoints.end(), d) -
                                    checkpoints.begin());
}

// Tallies of P-supported squarefree d in [lo, hi), binned by checkpoint.
std::vector<u64> sieve_range(const MemberTable& table, const std::vector<std::uint32_t>& small_primes,
                             u64 lo, u64 hi, std::span<const u64> checkpoints) {
    std::vector<u64> bins(checkpoints.size(), 0);
    constexpr u64 kSegment = 1 << 16;
    std::vector<u64> rest(kSegment);
    std::vector<std::uint8_t> ok(kSegment);
    for (u64 a = lo; a < hi; a += kSegment) {
        const u64 b = std::min(hi, a + kSegment);
        const u64 len = b - a;
        for (u64 i = 0; i < len; ++i) rest[i] = a + i;
        std::fill(ok.begin(), ok.begin() + static_cast<std::ptrdiff_t>(len), 1);
        for (u64 p : small_primes) {
            if (p >= b) break;
            const u64 first = (a + p - 1) / p * p;
            if (first >= b) continue;
            if (!table.contains(p)) {
                for (u64 m = first; m < b; m += p) ok[m - a] = 0;
                continue;
            }
            for (u64 m = first; m < b; m += p) {
                u64& r = rest[m - a];
                r /= p;
                if (r % p == 0) ok[m - a] = 0;
            }
        }
        std::size_t bin = bin_of(checkpoints, a);
        for (u64 i = 0; i < len; ++i) {
            const u64 d = a + i;
            while (bin < checkpoints.size() && checkpoints[bin] < d) ++bin;
            if (bin == checkpoints.size()) break;
            if (!ok[i]) continue;
            // what survives is 1 or a single prime above sqrt(max)
            if (rest[i] == 1 || table.contains(rest[i])) ++bins[bin];
        }
    }
    return bins;
}

void enumerate_products(const std::vector<std::uint32_t>& members, std::size_t from, u64 product, u64 x,
                        std::span<const u64> checkpoints, std::vector<u64>& bins) {
    for (std::size_t i = from; i < members.size(); ++i) {
        const u128 next = static_cast<u128>(product) * members[i];
        if (next > x) break;
        ++bins[bin_of(checkpoints, static_cast<u64>(next))];
        enumerate_products(members, i + 1, static_cast<u64>(next), x, checkpoints, bins);
    }
}

}  // namespace

std::vector<u64> squarefree_counts(const MemberTable& table, std::span<const u64> checkpoints, CountMode mode,
                                   unsigned shards) {
    require_ascending(checkpoints, table.limit());
    if (checkpoints.empty()) return {};
    const u64 x = checkpoints.back();
    std::vector<u64> bins(checkpoints.size(), 0);

    if (x >= 2) {
        if (mode == CountMode::Enumerate) {
            enumerate_products(table.members(), 0, 1, x, checkpoints, bins);
            // product 1 never gets counted: the loop only records proper products
        } else {
            const auto small = primes_up_to(isqrt(x));
            shards = std::max(1u, shards);
            const u64 span_len = (x - 1 + shards - 1) / shards;
            std::vector<std::vector<u64>> partial(shards);
            std::vector<std::thread> workers;
            for (unsigned s = 0; s < shards; ++s) {
                const u64 lo = 2 + s * span_len;
                const u64 hi = std::min(x + 1, lo + span_len);
                if (lo >= hi) {
                    partial[s].assign(checkpoints.size(), 0);
                    continue;
                }
                auto job = [&, s, lo, hi] { partial[s] = sieve_range(table, small, lo, hi, checkpoints); };
                if (shards == 1) job();
                else workers.emplace_back(job);
            }
            for (auto& w : workers) w.join();
            for (const auto& part : partial)
                for (std::size_t i = 0; i < bins.size(); ++i) bins[i] += part[i];
        }
    }
    for (std::size_t i = 1; i < bins.size(); ++i) bins[i] += bins[i - 1];
    return bins;
}

u64 count_squarefree_over_P(const PrimePredicate& pred, u64 x, CountMode mode) {
    if (x < 2) return 0;
    const MemberTable table(pred, x);
    const u64 cp[] = {x};
    return squarefree_counts(table, cp, mode, 1).back();
}

MeanValueFit mean_value_fit(std::span<const std::pair<u64, u64>> counts, double tau) {
    if (!(tau > 0.0 && tau <= 1.0)) throw PreconditionError("tau must lie in (0, 1]");
    if (counts.size() < 3) throw PreconditionError("mean_value_fit needs at least three checkpoints");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i].first < 3) throw PreconditionError("checkpoints must be at least 3");
        if (i > 0 && counts[i].first <= counts[i - 1].first)
            throw PreconditionError("checkpoints must be strictly ascending");
    }
    if (counts.back().first < 100 * counts.front().first)
        throw PreconditionError("checkpoints must span at least two decades");

    MeanValueFit fit;
    double sum = 0.0;
    for (const auto& [x, n] : counts) {
        const double xd = static_cast<double>(x);
        const double y = static_cast<double>(n) / (xd * std::pow(std::log(xd), tau - 1.0));
        fit.normalized.push_back(y);
        sum += y;
    }
    fit.constant = sum / static_cast<double>(counts.size());
    for (std::size_t i = 0; i < fit.normalized.size(); ++i) {
        fit.residuals.push_back(fit.normalized[i] - fit.constant);
        if (i > 0 && fit.normalized[i - 1] > 0.0)
            fit.max_successive_drift = std::max(fit.max_successive_drift,
                                                std::abs(fit.normalized[i] / fit.normalized[i - 1] - 1.0));
    }
    return fit;
}

AlgebraCensus algebra_census(i64 delta_k, std::span<const RelQuadExt> exts, u64 x) {
    AlgebraCensus out;
    out.x = x;
    out.d_bound = x >= 1 ? isqrt(x - 1) : 0;
    if (out.d_bound < 2) return out;

    const PrimePredicate pred(delta_k, std::vector<RelQuadExt>(exts.begin(), exts.end()));
    const MemberTable table(pred, out.d_bound);
    const QuadraticField k(delta_k);

    std::vector<std::pair<u64, std::vector<u64>>> found;  // (d, prime factors)
    std::vector<u64> stack;
    auto dfs = [&](auto& self, std::size_t from, u64 product) -> void {
        const auto& members = table.members();
        for (std::size_t i = from; i < members.size(); ++i) {
            const u64 next = product * members[i];
            if (next > out.d_bound) break;
            stack.push_back(members[i]);
            found.emplace_back(next, stack);
            self(self, i + 1, next);
            stack.pop_back();
        }
    };
    dfs(dfs, 0, 1);
    std::sort(found.begin(), found.end());

    for (const auto& [d, factors] : found) {
        std::set<PrimeOfK> ram;
        for (u64 p : factors)
            for (const auto& prime : primes_above(k, p)) ram.insert(prime);
        QuatAlgK b(delta_k, std::move(ram));
        for (const auto& e : exts)
            if (!embeds(b, e) || !embeds(b, e.conjugate()))
                throw VerificationFailure("census algebra for d = " + std::to_string(d) + " does not admit " +
                                          to_string(e));
        const auto pairing = fuchsian_admissible(b);
        if (!pairing.admissible || pairing.primes != factors)
            throw VerificationFailure("census algebra for d = " + std::to_string(d) +
                                      " is not a base change");
        out.supports.push_back(d);
        out.algebras.push_back(std::move(b));
    }
    out.count = out.supports.size();
    return out;
}

double wood_prediction(std::optional<u64> q_split, std::span<const u64> q_inert, u64 x) {
    const std::set<u64> inert(q_inert.begin(), q_inert.end());
    if (q_split && inert.count(*q_split)) return 0.0;
    double pred = 6.0 / (std::numbers::pi * std::numbers::pi) * static_cast<double>(x) * 0.5;
    auto factor = [](u64 l) { return static_cast<double>(l) / (2.0 * static_cast<double>(l) + 2.0); };
    if (q_split) pred *= factor(*q_split);
    for (u64 l : inert) pred *= factor(l);
    return pred;
}

WoodStats wood_stats(std::optional<u64> q_split, std::span<const u64> q_inert, u64 x) {
    if (x < 3) throw PreconditionError("wood_stats needs x >= 3");
    if (q_split && !is_prime(*q_split)) throw PreconditionError(std::to_string(*q_split) + " is not prime");
    for (u64 q : q_inert)
        if (!is_prime(q)) throw PreconditionError(std::to_string(q) + " is not prime");
    const std::set<u64> inert_set(q_inert.begin(), q_inert.end());
    const std::vector<u64> inert(inert_set.begin(), inert_set.end());

    WoodStats out;
    out.predicted = wood_prediction(q_split, inert, x);
    if (out.predicted == 0.0) return out;
    for_each_fundamental_discriminant(x, DiscriminantSign::Imaginary, [&](i64 d) {
        if (q_split && splitting_unchecked(d, *q_split) != SplitType::Split) return;
        for (u64 q : inert)
            if (splitting_unchecked(d, q) != SplitType::Inert) return;
        ++out.count;
    });
    out.ratio = static_cast<double>(out.count) / out.predicted;
    return out;
}

RamificationProbability ramification_probability_check(u64 ell, u64 x) {
    if (!is_prime(ell)) throw PreconditionError(std::to_string(ell) + " is not prime");
    if (x < 3) throw PreconditionError("ramification_probability_check needs x >= 3");
    RamificationProbability out;
    for_each_fundamental_discriminant(x, DiscriminantSign::Both, [&](i64 d) {
        ++out.total;
        if (mod_floor(d, ell) == 0) ++out.ramified;
    });
    out.fraction = out.total ? static_cast<double>(out.ramified) / static_cast<double>(out.total) : 0.0;
    out.expected = 1.0 / static_cast<double>(ell + 1);
    out.ratio = out.fraction / out.expected;
    return out;
}

}  // namespace arithgeo
