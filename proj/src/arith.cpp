#include "quadnorm/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace quadnorm::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Trial division primes below 100.
constexpr u64 kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

u64 brent(u64 n) {
    // Pollard rho with Brent cycle detection; n must be composite and odd.
    for (u64 c = 1;; ++c) {
        u64 y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
        const u64 m = 128;
        while (g == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                const u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            do {
                ys = (mulmod(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
        // rare: whole cycle collapsed, retry with another polynomial
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = brent(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

u64 isqrt(u64 n) {
    if (n == 0) return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : kSmallPrimes) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set proven complete below 3.3*10^24, in particular for all 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization f;
    f.value = n;
    std::vector<u64> primes;
    for (u64 p : kSmallPrimes) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], static_cast<int>(j - i));
        i = j;
    }
    return f;
}

SquarefreeCore squarefree_core(u64 n) {
    Factorization f = factorize(n);
    SquarefreeCore r{1, 1};
    for (auto [p, e] : f.factors) {
        if (e & 1) r.core *= p;
        for (int i = 0; i < e / 2; ++i) r.cofactor *= p;
    }
    return r;
}

int omega(u64 n) { return static_cast<int>(factorize(n).factors.size()); }

bool is_squarefree(u64 n) {
    Factorization f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return false;
    return true;
}

bool all_odd_primes_1_mod_4(const Factorization& f) {
    for (auto [p, e] : f.factors)
        if (p != 2 && p % 4 != 1) return false;
    return true;
}

bool is_global_norm_minus_one(u64 M) {
    Factorization f = factorize(M);
    for (auto [p, e] : f.factors)
        if (e > 1) throw std::invalid_argument("is_global_norm_minus_one: M must be squarefree");
    if (M % 4 == 3) return false;
    return all_odd_primes_1_mod_4(f);
}

}  // namespace quadnorm::arith
