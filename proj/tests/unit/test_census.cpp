#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "arithgeo/census.hpp"
#include "arithgeo/errors.hpp"
#include "arithgeo/fieldforge.hpp"
#include "oracles.hpp"

using namespace arithgeo;

namespace {

// Membership in P from the definition: p splits in k, no boundary divisor,
// and every prime of k above p has no root of the quartic for L_i and L_i'.
bool member_oracle(i64 delta, const std::vector<i64>& xs, u64 p) {
    if (p == 2 || oracle::mod(delta, p) == 0) return false;
    for (i64 x : xs)
        if (oracle::mod(x * x - delta, p) == 0) return false;
    if (oracle::quadratic_splitting(delta, p) != 0) return false;
    for (u64 r = 1; r < p; ++r) {
        if (r * r % p != oracle::mod(delta, p)) continue;
        for (i64 x : xs)
            for (bool conj : {false, true})
                if (oracle::quartic_splitting(delta, x, conj, p, r) == 0) return false;
    }
    return true;
}

u64 squarefree_oracle(i64 delta, const std::vector<i64>& xs, u64 limit) {
    u64 count = 0;
    for (u64 n = 2; n <= limit; ++n) {
        if (!oracle::is_squarefree(static_cast<i64>(n))) continue;
        u64 m = n;
        bool ok = true;
        for (u64 f = 2; f * f <= m && ok; ++f)
            if (m % f == 0) {
                ok = member_oracle(delta, xs, f);
                m /= f;
            }
        if (ok && m > 1) ok = member_oracle(delta, xs, m);
        count += ok;
    }
    return count;
}

std::vector<RelQuadExt> exts_for(i64 delta, const std::vector<i64>& xs) {
    std::vector<RelQuadExt> out;
    for (i64 x : xs) out.emplace_back(delta, x);
    return out;
}

}  // namespace

TEST_CASE("membership examples") {
    const PrimePredicate pred(-4, exts_for(-4, {1}));
    CHECK(pred.in_P(41));
    CHECK_FALSE(pred.in_P(13));
    CHECK_FALSE(pred.in_P(3));
    CHECK_THROWS_AS(pred.in_P(5), BoundaryPrimeError);
    CHECK_THROWS_AS(pred.in_P(2), BoundaryPrimeError);
    CHECK_THROWS_AS(pred.in_P(15), PreconditionError);
    CHECK(pred.classify(5) == Membership::Boundary);
    CHECK(pred.expected_density() == 0.125);
    CHECK(PrimePredicate(-4, {}).expected_density() == 0.5);
    CHECK_THROWS_AS(PrimePredicate(5, {}), PreconditionError);
    CHECK_THROWS_AS(PrimePredicate(-3, exts_for(-4, {1})), PreconditionError);
    CHECK_THROWS_AS(PrimePredicate(-4, {RelQuadExt(-4, 1, true)}), PreconditionError);
}

TEST_CASE("membership agrees with the quartic root-count oracle") {
    const std::vector<std::pair<i64, std::vector<i64>>> cases{
        {-4, {1}}, {-4, {1, 3}}, {-3, {2}}, {-7, {1, 2}}, {-8, {1}}, {-4, {}}};
    for (const auto& [delta, xs] : cases) {
        const PrimePredicate pred(delta, exts_for(delta, xs));
        int mismatches = 0;
        for (u64 p : primes_up_to(3000)) {
            const bool want = member_oracle(delta, xs, p);
            if ((pred.classify(p) == Membership::Member) != want) ++mismatches;
        }
        CHECK_MESSAGE(mismatches == 0, "delta " << delta);
    }
}

TEST_CASE("squarefree counts: small examples") {
    const PrimePredicate pred(-4, exts_for(-4, {1}));
    CHECK(count_squarefree_over_P(pred, 40) == 0);
    CHECK(count_squarefree_over_P(pred, 41) == 1);
    CHECK(count_squarefree_over_P(pred, 1) == 0);
    CHECK(count_squarefree_over_P(pred, 41, CountMode::Enumerate) == 1);
}

TEST_CASE("squarefree counts agree with factoring every integer") {
    const std::vector<std::pair<i64, std::vector<i64>>> cases{{-4, {1}}, {-3, {}}, {-7, {1}}, {-4, {}}};
    for (const auto& [delta, xs] : cases) {
        const PrimePredicate pred(delta, exts_for(delta, xs));
        for (u64 x : {100u, 1000u, 20000u}) {
            const u64 want = squarefree_oracle(delta, xs, x);
            CHECK(count_squarefree_over_P(pred, x, CountMode::Sieve) == want);
            CHECK(count_squarefree_over_P(pred, x, CountMode::Enumerate) == want);
        }
    }
}

TEST_CASE("property: sieve and enumeration agree at random checkpoints, any shard count") {
    std::mt19937_64 rng(7);
    const PrimePredicate pred(-4, {});
    const MemberTable table(pred, 100'000);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<u64> cps;
        for (int i = 0; i < 4; ++i) cps.push_back(2 + rng() % 99'999);
        std::sort(cps.begin(), cps.end());
        cps.erase(std::unique(cps.begin(), cps.end()), cps.end());
        const unsigned shards = 1 + static_cast<unsigned>(rng() % 5);
        const auto sieve = squarefree_counts(table, cps, CountMode::Sieve, shards);
        const auto walk = squarefree_counts(table, cps, CountMode::Enumerate);
        CHECK(sieve == walk);
        for (std::size_t i = 1; i < sieve.size(); ++i) CHECK(sieve[i] >= sieve[i - 1]);
    }
    const std::vector<u64> unsorted{100, 50};
    CHECK_THROWS_AS(squarefree_counts(table, unsorted), PreconditionError);
    const std::vector<u64> too_big{200'000};
    CHECK_THROWS_AS(squarefree_counts(table, too_big), PreconditionError);
}

TEST_CASE("member table and density report") {
    const PrimePredicate pred(-4, {});
    const MemberTable table(pred, 1000);
    // P = primes = 1 mod 4 for the bare field
    u64 want = 0;
    for (u64 p : primes_up_to(1000)) want += p % 4 == 1;
    CHECK(table.count_up_to(1000) == want);
    CHECK(table.contains(13));
    CHECK_FALSE(table.contains(7));
    const auto rows = prime_density_report(pred, 1000);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].checkpoint == 100);
    CHECK(rows[1].count == want);
    CHECK(rows[1].ratio == doctest::Approx(static_cast<double>(want) * std::log(1000.0) / 1000.0));
    CHECK(decade_checkpoints(100, 5000) == std::vector<u64>{100, 1000, 5000});
    CHECK(decade_checkpoints(100, 10000) == std::vector<u64>{100, 1000, 10000});
}

TEST_CASE("mean value fit") {
    const double c = 0.37, tau = 0.125;
    std::vector<std::pair<u64, u64>> counts;
    for (u64 x : {10'000ULL, 100'000ULL, 1'000'000ULL, 10'000'000ULL}) {
        const double xd = static_cast<double>(x);
        counts.emplace_back(x, static_cast<u64>(std::llround(c * xd * std::pow(std::log(xd), tau - 1.0))));
    }
    const auto fit = mean_value_fit(counts, tau);
    CHECK(fit.constant == doctest::Approx(c).epsilon(1e-3));
    for (double r : fit.residuals) CHECK(std::abs(r) < 1e-3);
    CHECK(fit.max_successive_drift < 1e-3);

    CHECK_THROWS_AS(mean_value_fit(counts, 0.0), PreconditionError);
    CHECK_THROWS_AS(mean_value_fit(counts, 1.5), PreconditionError);
    const std::vector<std::pair<u64, u64>> two(counts.begin(), counts.begin() + 2);
    CHECK_THROWS_AS(mean_value_fit(two, tau), PreconditionError);
    const std::vector<std::pair<u64, u64>> narrow{{1000, 10}, {2000, 20}, {5000, 50}};
    CHECK_THROWS_AS(mean_value_fit(narrow, tau), PreconditionError);
}

TEST_CASE("algebra census") {
    const auto exts = exts_for(-4, {1});
    const auto at = algebra_census(-4, exts, 1682);
    CHECK(at.count == 1);
    CHECK(at.supports == std::vector<u64>{41});
    CHECK(at.algebras[0].disc_norm() == 41 * 41);
    CHECK(algebra_census(-4, exts, 1681).count == 0);  // the bound is strict
    CHECK(algebra_census(-4, exts, 1600).count == 0);

    // each d in the census is a squarefree product of members, and nothing else
    const auto big = algebra_census(-4, exts, 4'000'000);
    const PrimePredicate pred(-4, exts);
    CHECK(big.count == count_squarefree_over_P(pred, big.d_bound));
    for (const auto& b : big.algebras) {
        CHECK(fuchsian_admissible(b).admissible);
        CHECK(embeds(b, exts[0]));
        CHECK(embeds(b, exts[0].conjugate()));
    }
}

TEST_CASE("Wood statistics") {
    const std::vector<u64> three{3};
    CHECK(wood_prediction(3, three, 1000) == 0.0);
    const auto contradiction = wood_stats(3, three, 1000);
    CHECK(contradiction.count == 0);
    CHECK(contradiction.predicted == 0.0);
    CHECK(wood_prediction(std::nullopt, {}, 1000) ==
          doctest::Approx(6.0 / (std::numbers::pi * std::numbers::pi) * 500.0));

    // counted against the oracle's splitting on a small range
    const auto s = wood_stats(7, three, 3000);
    u64 want = 0;
    for (i64 a = 3; a <= 3000; ++a)
        if (oracle::is_fundamental(-a) && oracle::quadratic_splitting(-a, 7) == 0 &&
            oracle::quadratic_splitting(-a, 3) == 1)
            ++want;
    CHECK(s.count == want);

    const std::vector<u64> dup{3, 3};
    CHECK(wood_stats(7, dup, 3000).count == want);
    const std::vector<u64> nine{9};
    CHECK_THROWS_AS(wood_stats(7, nine, 3000), PreconditionError);
}

TEST_CASE("property: the prediction is multiplicative over independent primes") {
    std::mt19937_64 rng(11);
    const auto small = primes_up_to(50);
    for (int trial = 0; trial < 100; ++trial) {
        const u64 a = small[rng() % small.size()], b = small[rng() % small.size()];
        const u64 q = small[rng() % small.size()];
        if (a == b || a == q || b == q) continue;
        const std::vector<u64> ab{a, b}, only_a{a}, only_b{b};
        const double lhs = wood_prediction(q, ab, 100'000) * wood_prediction(std::nullopt, {}, 100'000);
        const double rhs = wood_prediction(q, only_a, 100'000) * wood_prediction(std::nullopt, only_b, 100'000);
        CHECK(lhs == doctest::Approx(rhs));
    }
}

TEST_CASE("ramification probability") {
    const auto r = ramification_probability_check(3, 3000);
    u64 total = 0, ram = 0;
    for (i64 a = 3; a <= 3000; ++a)
        for (i64 d : {-a, a})
            if (oracle::is_fundamental(d)) {
                ++total;
                ram += d % 3 == 0;
            }
    CHECK(r.total == total);
    CHECK(r.ramified == ram);
    CHECK(r.expected == doctest::Approx(0.25));
    const auto big = ramification_probability_check(5, 1'000'000);
    CHECK(std::abs(big.ratio - 1.0) < 0.02);
    CHECK_THROWS_AS(ramification_probability_check(4, 1000), PreconditionError);
}
