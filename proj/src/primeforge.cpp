#include "arithgeo/primeforge.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "arithgeo/errors.hpp"

namespace arithgeo {

ApPrime nth_prime_in_ap(i64 a, u64 q, u64 n) {
    if (q < 2) throw PreconditionError("modulus must be >= 2");
    if (n == 0) throw PreconditionError("index n must be >= 1");
    const u64 a0 = mod_floor(a, q);
    if (std::gcd(a0, q) != 1) throw PreconditionError("gcd(a, q) > 1");

    u64 found = 0;
    for (u64 c = a0;; c += q) {
        if (is_prime(c) && ++found == n) {
            const double nn = static_cast<double>(n);
            return ApPrime{c, static_cast<double>(c) / (nn * std::log(2.0 * nn))};
        }
    }
}

QPrimeSelection select_q_primes(std::size_t n, u64 ceiling) {
    if (n == 0) throw PreconditionError("select_q_primes needs n >= 1");
    QPrimeSelection out;
    for (u64 c = 5; out.p.size() < n; c += 4)
        if (is_prime(c)) out.p.push_back(c);

    auto symbol_row = [&](u64 c) {
        std::vector<int> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = jacobi(static_cast<i64>(c), out.p[j]);
        return row;
    };
    auto taken = [&](u64 c) {
        return std::find(out.q.begin(), out.q.end(), c) != out.q.end() ||
               std::find(out.p.begin(), out.p.end(), c) != out.p.end();
    };

    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<int> want(n, 1);
        if (i < n) {
            want[i] = -1;
        } else {
            std::fill(want.begin(), want.end(), -1);
        }
        u64 c = 3;
        for (;; c = next_prime(c)) {
            if (c > ceiling) throw SearchExhausted("select_q_primes: ceiling exceeded");
            if (!taken(c) && symbol_row(c) == want) break;
        }
        out.q.push_back(c);
        std::vector<u64> res(n);
        for (std::size_t j = 0; j < n; ++j) res[j] = c % out.p[j];
        out.residues.push_back(std::move(res));
    }

    out.max_q = *std::max_element(out.q.begin(), out.q.end());
    if (n >= 2) {
        const double nn = static_cast<double>(n);
        out.exponent_fit = std::log(static_cast<double>(out.max_q)) / (nn * std::log(nn));
    }

    const auto m = verify_splitting_matrix(out.p, out.q);
    if (!has_selection_pattern(m)) throw VerificationFailure("select_q_primes: splitting pattern mismatch");
    return out;
}

SplittingMatrix verify_splitting_matrix(std::span<const u64> p, std::span<const u64> q) {
    std::vector<QuadraticField> fields;
    fields.reserve(p.size());
    for (u64 pj : p) fields.emplace_back(discriminant_of_sqrt_prime(pj));
    SplittingMatrix m(q.size(), std::vector<SplitType>(p.size()));
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = splitting(fields[j], q[i]);
    return m;
}

bool has_selection_pattern(const SplittingMatrix& m) {
    if (m.empty()) return false;
    const std::size_t n = m.size() - 1;
    for (std::size_t i = 0; i <= n; ++i) {
        if (m[i].size() != n) return false;
        for (std::size_t j = 0; j < n; ++j) {
            const SplitType want = (i == n || i == j) ? SplitType::Inert : SplitType::Split;
            if (m[i][j] != want) return false;
        }
    }
    return true;
}

}  // namespace arithgeo
