#include "arithgeo/arith.hpp"

#include <algorithm>
#include <cmath>

namespace arithgeo {

u64 powmod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

namespace {

bool miller_rabin_round(u64 n, u64 a, u64 d, int r) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : small)
        if (!miller_rabin_round(n, a, d, r)) return false;
    return true;
}

int jacobi(i64 a_signed, u64 n) {
    u64 a = mod_floor(a_signed, n);
    int result = 1;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            const u64 r = n & 7;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

int kronecker(i64 a, u64 n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    while ((n & 1) == 0) {
        n >>= 1;
        // (a/2): 0 if a even, +1 if a = +-1 mod 8, -1 if a = +-3 mod 8
        const u64 r = mod_floor(a, 8);
        if ((r & 1) == 0) return 0;
        if (r == 3 || r == 5) result = -result;
    }
    if (n == 1) return result;
    return result * jacobi(a, n);
}

std::optional<u64> sqrt_mod_prime(i64 a_signed, u64 p) {
    const u64 a = mod_floor(a_signed, p);
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;

    u64 root;
    if (p % 4 == 3) {
        root = powmod(a, (p + 1) / 4, p);
    } else {
        u64 q = p - 1;
        int s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        u64 z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        u64 c = powmod(z, q, p);
        u64 r = powmod(a, (q + 1) / 2, p);
        u64 t = powmod(a, q, p);
        int m = s;
        while (t != 1) {
            int i = 1;
            u64 t2 = mulmod(t, t, p);
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            u64 b = c;
            for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
            r = mulmod(r, b, p);
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            m = i;
        }
        root = r;
    }
    return std::min(root, p - root);
}

u64 invmod(u64 a, u64 m) {
    i128 t = 0, new_t = 1;
    i128 r = m, new_r = a % m;
    while (new_r != 0) {
        const i128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return mod_floor(t, m);
}

u64 isqrt(u64 n) {
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

bool is_perfect_square(i128 n) {
    if (n < 0) return false;
    if (n > static_cast<i128>(~u64{0})) {
        // Only reachable for very large discriminant-like values; fall back
        // to a long double estimate refined by integer steps.
        u128 r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
        while (r * r > static_cast<u128>(n)) --r;
        while ((r + 1) * (r + 1) <= static_cast<u128>(n)) ++r;
        return r * r == static_cast<u128>(n);
    }
    const u64 r = isqrt(static_cast<u64>(n));
    return static_cast<i128>(r) * r == n;
}

bool is_squarefree(u64 n) {
    if (n == 0) return false;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return false;
        }
    }
    return true;
}

int valuation(i128 n, u64 p) {
    if (n == 0) return 0;
    int v = 0;
    while (n % static_cast<i128>(p) == 0) {
        n /= static_cast<i128>(p);
        ++v;
    }
    return v;
}

std::vector<std::uint8_t> prime_map(u64 limit) {
    std::vector<std::uint8_t> sieve(limit + 1, 1);
    sieve[0] = 0;
    if (limit >= 1) sieve[1] = 0;
    for (u64 i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (u64 j = i * i; j <= limit; j += i) sieve[j] = 0;
    return sieve;
}

std::vector<std::uint32_t> primes_up_to(u64 limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    const auto sieve = prime_map(limit);
    for (u64 i = 2; i <= limit; ++i)
        if (sieve[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

std::vector<std::uint8_t> squarefree_map(u64 limit) {
    std::vector<std::uint8_t> sf(limit + 1, 1);
    sf[0] = 0;
    for (u64 p = 2; p * p <= limit; ++p) {
        const u64 sq = p * p;
        for (u64 j = sq; j <= limit; j += sq) sf[j] = 0;
    }
    return sf;
}

u64 next_prime(u64 n) {
    if (n < 2) return 2;
    u64 c = n + 1;
    while (!is_prime(c)) ++c;
    return c;
}

void for_each_prime(u64 limit, const std::function<void(u64)>& visit) {
    if (limit < 2) return;
    const u64 root = isqrt(limit);
    const auto base = primes_up_to(root);
    constexpr u64 kSegment = 1 << 18;
    std::vector<std::uint8_t> seg(kSegment);
    for (u64 lo = 2; lo <= limit; lo += kSegment) {
        const u64 hi = std::min(limit + 1, lo + kSegment);
        std::fill(seg.begin(), seg.end(), 1);
        for (u64 p : base) {
            if (p * p >= hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 m = start; m < hi; m += p) seg[m - lo] = 0;
        }
        for (u64 v = lo; v < hi; ++v)
            if (seg[v - lo]) visit(v);
    }
}

std::string to_string(i128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

}  // namespace arithgeo
