#include <doctest.h>

#include <optional>

#include "arithgeo/errors.hpp"
#include "arithgeo/relquad.hpp"
#include "oracles.hpp"

using namespace arithgeo;

namespace {

PrimeOfK prime_with_root(i64 delta, u64 p, u64 root) {
    for (const auto& prime : primes_above(QuadraticField(delta), p))
        if (prime.root && *prime.root == root) return prime;
    FAIL("no prime above " << p << " with root " << root);
    return {};
}

std::vector<oracle::BigInt> coeffs_low_to_high(const QuarticPoly& f) {
    std::vector<oracle::BigInt> out;
    for (int d = 0; d <= 4; ++d) out.emplace_back(to_string(f[d]));
    return out;
}

}  // namespace

TEST_CASE("construction and validity") {
    CHECK_NOTHROW(RelQuadExt(-4, 1));
    CHECK_NOTHROW(RelQuadExt(-3, 0));
    CHECK_THROWS_AS(RelQuadExt(5, 1), PreconditionError);    // real base
    CHECK_THROWS_AS(RelQuadExt(-5, 1), PreconditionError);   // not fundamental
    CHECK_THROWS_AS(RelQuadExt(-4, 0), PreconditionError);   // 2i = (1+i)^2
    CHECK(beta_is_square_in_k(-4, 0));
    CHECK_FALSE(beta_is_square_in_k(-4, 1));
    const RelQuadExt e(-4, 1);
    CHECK(e.conjugate().is_conjugate());
    CHECK(e.conjugate().conjugate() == e);
    CHECK(e.beta_norm() == 5);
}

TEST_CASE("beta_is_square_in_k agrees with a search for square roots") {
    // x + sqrt(delta) = ((a + b sqrt(delta))/2)^2 forces ab = 2 and
    // a^2 + b^2 delta = 4x
    for (i64 delta : {-3, -4, -7, -8, -11, -15, -20}) {
        for (i64 x = -40; x <= 40; ++x) {
            bool found = false;
            for (i64 a = -30; a <= 30 && !found; ++a)
                for (i64 b = -30; b <= 30 && !found; ++b) {
                    // (a + b sqrt(delta))^2 / 4 = (a^2 + b^2 delta)/4 + (ab/2) sqrt(delta)
                    if (a * b != 2) continue;
                    if ((a * a + b * b * delta) == 4 * x) found = true;
                }
            CHECK_MESSAGE(beta_is_square_in_k(delta, x) == found, delta << " " << x);
        }
    }
}

TEST_CASE("minimal polynomial and discriminants") {
    CHECK(to_string(minimal_polynomial(RelQuadExt(-4, 1))) == "T^4 - 2T^2 + 5");
    CHECK(to_string(minimal_polynomial(RelQuadExt(-4, 3))) == "T^4 - 6T^2 + 13");
    CHECK(to_string(minimal_polynomial(RelQuadExt(-3, 0))) == "T^4 + 3");
    CHECK(poly_discriminant(RelQuadExt(-4, 1)) == 20480);
    CHECK(poly_discriminant(RelQuadExt(-4, 3)) == 53248);
    CHECK(poly_discriminant(RelQuadExt(-3, 0)) == 6912);
    CHECK(disc_upper_bound(RelQuadExt(-4, 1)) == 20480);
    CHECK(disc_upper_bound(RelQuadExt(-4, 3)) == 53248);
    CHECK(disc_upper_bound(RelQuadExt(-3, 0)) == 6912);

    for (i64 delta : {-3, -4, -7, -8, -11})
        for (i64 x = -6; x <= 6; ++x) {
            if (beta_is_square_in_k(delta, x)) continue;
            const RelQuadExt e(delta, x);
            CHECK(minimal_polynomial(e) == minimal_polynomial(e.conjugate()));
            CHECK(poly_discriminant(e) == poly_discriminant(e.conjugate()));
            const auto f = coeffs_low_to_high(minimal_polynomial(e));
            CHECK(oracle::discriminant(f).str() == to_string(poly_discriminant(e)));
            CHECK(disc_upper_bound(e) >= (poly_discriminant(e) < 0 ? -poly_discriminant(e) : poly_discriminant(e)));
        }
}

TEST_CASE("splitting_in_L examples") {
    const RelQuadExt e(-4, 1);
    // sqrt(-4) = 2i; at 5 the root 4 makes beta = 1 + 4 = 0
    CHECK(splitting_in_L(e, prime_with_root(-4, 5, 4)) == SplitType::Ramified);
    CHECK(splitting_in_L(e, prime_with_root(-4, 13, 3)) == SplitType::Split);   // beta = 4
    CHECK(splitting_in_L(e, prime_with_root(-4, 13, 10)) == SplitType::Inert);  // beta = 11
    CHECK(e.beta_residue(prime_with_root(-4, 13, 3)) == 4);
    CHECK(e.beta_residue(prime_with_root(-4, 13, 10)) == 11);

    CHECK_THROWS_AS(splitting_in_L(e, primes_above(QuadraticField(-4), 3)[0]), OutOfScopeError);
    CHECK_THROWS_AS(splitting_in_L(e, primes_above(QuadraticField(-4), 2)[0]), OutOfScopeError);
    CHECK_THROWS_AS(splitting_in_L(RelQuadExt(-7, 1), primes_above(QuadraticField(-7), 2)[0]), OutOfScopeError);
}

TEST_CASE("relative_ramification") {
    const RelQuadExt e(-4, 1);
    const auto at5 = relative_ramification(e, 5);
    REQUIRE(at5.size() == 2);
    int ramified = 0;
    for (const auto& [prime, s] : at5) ramified += s == SplitType::Ramified;
    CHECK(ramified == 1);

    const auto at41 = relative_ramification(e, 41);
    REQUIRE(at41.size() == 2);
    CHECK(at41[0].second == SplitType::Inert);
    CHECK(at41[1].second == SplitType::Inert);
    CHECK(e.beta_residue(at41[0].first) + e.beta_residue(at41[1].first) == 19 + 24);

    const auto at13 = relative_ramification(e, 13);
    CHECK(((at13[0].second == SplitType::Split) != (at13[1].second == SplitType::Split)));
}

TEST_CASE("splitting_in_L agrees with the quartic root-count oracle for p <= 500") {
    for (i64 delta : {-3, -4, -7, -8, -11}) {
        const QuadraticField k(delta);
        for (i64 x = -5; x <= 12; ++x) {
            if (beta_is_square_in_k(delta, x)) continue;
            for (bool conj : {false, true}) {
                const RelQuadExt e(delta, x, conj);
                int mismatches = 0;
                for (u64 p : primes_up_to(500)) {
                    if (p == 2 || splitting(k, p) != SplitType::Split) continue;
                    for (const auto& prime : primes_above(k, p)) {
                        SplitType got;
                        try {
                            got = splitting_in_L(e, prime);
                        } catch (const OutOfScopeError&) {
                            continue;  // even-order zero of beta
                        }
                        const int want = oracle::quartic_splitting(delta, x, conj, p, *prime.root);
                        if ((want == 0) != (got == SplitType::Split) || (want == 2) != (got == SplitType::Ramified))
                            ++mismatches;
                    }
                }
                CHECK_MESSAGE(mismatches == 0, "delta " << delta << " x " << x << " conj " << conj);
            }
        }
    }
}

TEST_CASE("property: conjugate symmetry and product of residues") {
    for (i64 delta : {-3, -4, -7, -8, -11, -19, -24}) {
        const QuadraticField k(delta);
        for (i64 x : {-3, 1, 2, 5, 9}) {
            if (beta_is_square_in_k(delta, x)) continue;
            const RelQuadExt e(delta, x), ec = e.conjugate();
            for (u64 p : primes_up_to(300)) {
                if (p == 2 || splitting(k, p) != SplitType::Split) continue;
                const auto above = primes_above(k, p);
                // P splits in L iff P' splits in L'
                for (int i : {0, 1}) {
                    std::optional<SplitType> a, b;
                    try {
                        a = splitting_in_L(e, above[i]);
                    } catch (const OutOfScopeError&) {
                    }
                    try {
                        b = splitting_in_L(ec, above[1 - i]);
                    } catch (const OutOfScopeError&) {
                    }
                    CHECK(a == b);
                }
                CHECK(mulmod(e.beta_residue(above[0]), e.beta_residue(above[1]), p) ==
                      mod_floor(e.beta_norm(), p));
            }
        }
    }
}

TEST_CASE("Galois test") {
    CHECK_FALSE(is_galois_over_Q(RelQuadExt(-4, 1)));
    CHECK_FALSE(is_galois_over_Q(RelQuadExt(-4, 3)));
    CHECK(quartic_is_galois(-4, 0));
    CHECK(is_galois_over_Q(RelQuadExt(-3, 1)));  // norm 4 is a square: biquadratic
    CHECK(is_galois_over_Q(RelQuadExt(-4, 2)) == false);
}

TEST_CASE("compositum degree certificate") {
    const std::vector<RelQuadExt> two{RelQuadExt(-4, 1), RelQuadExt(-4, 3)};
    const auto cert = compositum_degree_check(two);
    CHECK(cert.verdict == Verdict::True);
    REQUIRE(cert.witnesses.size() == 2);
    CHECK(cert.witnesses[0]->p == 5);
    CHECK(cert.witnesses[1]->p == 13);

    const std::vector<RelQuadExt> one{RelQuadExt(-4, 1)};
    const auto single = compositum_degree_check(one);
    CHECK(single.verdict == Verdict::True);
    CHECK(single.witnesses[0]->p == 5);

    const std::vector<RelQuadExt> dup{RelQuadExt(-4, 1), RelQuadExt(-4, 1)};
    CHECK_THROWS_AS(compositum_degree_check(dup), PreconditionError);
    const std::vector<RelQuadExt> conj{RelQuadExt(-4, 1, true)};
    CHECK_THROWS_AS(compositum_degree_check(conj), PreconditionError);
    const std::vector<RelQuadExt> mixed{RelQuadExt(-4, 1), RelQuadExt(-3, 1)};
    CHECK_THROWS_AS(compositum_degree_check(mixed), PreconditionError);
    CHECK_THROWS_AS(compositum_degree_check(std::vector<RelQuadExt>{}), PreconditionError);

    const std::vector<RelQuadExt> galois{RelQuadExt(-3, 1)};
    CHECK(compositum_degree_check(galois).verdict == Verdict::False);
}
