#include <doctest.h>

#include <cmath>
#include <numbers>

#include "arithgeo/errors.hpp"
#include "arithgeo/quadfields.hpp"
#include "oracles.hpp"

using namespace arithgeo;

namespace {

SplitType from_oracle(int code) {
    return code == 0 ? SplitType::Split : code == 1 ? SplitType::Inert : SplitType::Ramified;
}

}  // namespace

TEST_CASE("fundamental discriminants") {
    CHECK(is_fundamental_discriminant(-4));
    CHECK_FALSE(is_fundamental_discriminant(9));
    CHECK(is_fundamental_discriminant(12));
    CHECK_FALSE(is_fundamental_discriminant(1));
    CHECK_FALSE(is_fundamental_discriminant(0));
    CHECK_FALSE(is_fundamental_discriminant(-5));
    CHECK(is_fundamental_discriminant(-20));
    for (i64 d = -3000; d <= 3000; ++d) CHECK_MESSAGE(is_fundamental_discriminant(d) == oracle::is_fundamental(d), d);

    CHECK_THROWS_AS(QuadraticField(-5), PreconditionError);
    CHECK_THROWS_AS(QuadraticField(1), PreconditionError);
    CHECK(QuadraticField(-4).is_imaginary());
    CHECK_FALSE(QuadraticField(5).is_imaginary());
}

TEST_CASE("discriminant of Q(sqrt p)") {
    CHECK(discriminant_of_sqrt_prime(2) == 8);
    CHECK(discriminant_of_sqrt_prime(5) == 5);
    CHECK(discriminant_of_sqrt_prime(3) == 12);
    CHECK(discriminant_of_sqrt_prime(7) == 28);
}

TEST_CASE("splitting examples") {
    const QuadraticField k(-4);
    CHECK(splitting(k, 2) == SplitType::Ramified);
    CHECK(splitting(k, 5) == SplitType::Split);
    CHECK(splitting(k, 3) == SplitType::Inert);
    CHECK_THROWS_AS(splitting(k, 15), PreconditionError);
    CHECK(splitting(QuadraticField(-7), 2) == SplitType::Split);  // -7 = 1 mod 8
    CHECK(splitting(QuadraticField(5), 2) == SplitType::Inert);   // 5 = 5 mod 8
}

TEST_CASE("splitting agrees with factoring the minimal polynomial mod p, p <= 10^4") {
    const auto primes = primes_up_to(10'000);
    for (i64 d : {-3, -4, -7, -8, -11, 5, 8, 12, 13}) {
        const QuadraticField k(d);
        int mismatches = 0;
        for (u64 p : primes)
            if (splitting(k, p) != from_oracle(oracle::quadratic_splitting(d, p))) ++mismatches;
        CHECK_MESSAGE(mismatches == 0, "delta = " << d);
    }
}

TEST_CASE("primes_above") {
    const QuadraticField k(-4);
    const auto five = primes_above(k, 5);
    REQUIRE(five.size() == 2);
    CHECK(*five[0].root == 1);
    CHECK(*five[1].root == 4);
    CHECK(five[0].norm() == 5);

    const auto three = primes_above(k, 3);
    REQUIRE(three.size() == 1);
    CHECK(three[0].kind == SplitType::Inert);
    CHECK(three[0].norm() == 9);
    CHECK_FALSE(three[0].root.has_value());

    const auto two = primes_above(k, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0].kind == SplitType::Ramified);
    CHECK(two[0].norm() == 2);

    // p = 2 split: the two primes are told apart by (1 + sqrt(delta))/2 mod 2
    const auto over2 = primes_above(QuadraticField(-7), 2);
    REQUIRE(over2.size() == 2);
    CHECK(*over2[0].root == 0);
    CHECK(*over2[1].root == 1);
}

TEST_CASE("property: norms over p (with ramification index) multiply to p^2 and split roots square to delta") {
    for (i64 d : {-3, -4, -7, -8, -11, -15, -20, -23, 5, 8, 12, 13, 17, 21, 24}) {
        const QuadraticField k(d);
        for (u64 p : primes_up_to(500)) {
            const auto above = primes_above(k, p);
            u64 norm = 1;
            for (const auto& prime : above) norm *= prime.kind == SplitType::Ramified ? p * p : prime.norm();
            CHECK(norm == p * p);
            if (above.size() == 2 && p != 2) {
                const u64 r = *above[0].root, s = *above[1].root;
                CHECK(r != s);
                CHECK(r + s == p);
                CHECK(r * r % p == mod_floor(d, p));
            }
        }
    }
}

TEST_CASE("split_primes_prefix") {
    CHECK(split_primes_prefix(QuadraticField(-4), 2, true).primes == std::vector<u64>{5, 13});
    CHECK(split_primes_prefix(QuadraticField(-3), 1, true).primes == std::vector<u64>{7});
    CHECK(split_primes_prefix(QuadraticField(-4), 1, true).primes == std::vector<u64>{5});
    CHECK(split_primes_prefix(QuadraticField(-7), 1, false).primes == std::vector<u64>{2});
    CHECK(split_primes_prefix(QuadraticField(-7), 1, true).primes == std::vector<u64>{11});
    const auto pre = split_primes_prefix(QuadraticField(-4), 2, true);
    CHECK(pre.growth_ratio == doctest::Approx(13.0 / (2.0 * std::log(4.0))));
}

TEST_CASE("enumerating fundamental discriminants") {
    CHECK(enumerate_fundamental_discriminants(10, DiscriminantSign::Imaginary) == std::vector<i64>{-3, -4, -7, -8});
    CHECK(enumerate_fundamental_discriminants(3, DiscriminantSign::Imaginary) == std::vector<i64>{-3});
    CHECK(enumerate_fundamental_discriminants(13, DiscriminantSign::Real) == std::vector<i64>{5, 8, 12, 13});
    CHECK_THROWS_AS(enumerate_fundamental_discriminants(2, DiscriminantSign::Both), PreconditionError);

    // ascending |d| with negatives first, and exactly the oracle's set
    const auto all = enumerate_fundamental_discriminants(2000, DiscriminantSign::Both);
    std::vector<i64> expected;
    for (i64 a = 3; a <= 2000; ++a) {
        if (oracle::is_fundamental(-a)) expected.push_back(-a);
        if (oracle::is_fundamental(a)) expected.push_back(a);
    }
    CHECK(all == expected);

    const double x = 1e6;
    const auto big = enumerate_fundamental_discriminants(1'000'000, DiscriminantSign::Both);
    CHECK(std::abs(static_cast<double>(big.size()) / (6.0 / (std::numbers::pi * std::numbers::pi) * x) - 1.0) < 0.01);
    const auto mid = enumerate_fundamental_discriminants(100'000, DiscriminantSign::Both);
    CHECK(std::abs(static_cast<double>(mid.size()) / (6.0 / (std::numbers::pi * std::numbers::pi) * 1e5) - 1.0) <
          0.02);
}
