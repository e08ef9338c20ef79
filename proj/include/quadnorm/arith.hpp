#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace quadnorm::arith {

/// Complete prime factorization of a positive integer.
/// Invariant: product of prime^exponent equals value, primes strictly increasing.
struct Factorization {
    std::uint64_t value = 1;
    std::vector<std::pair<std::uint64_t, int>> factors;
};

struct SquarefreeCore {
    std::uint64_t core;      // squarefree part
    std::uint64_t cofactor;  // n == core * cofactor^2
};

/// Floor of the integer square root.
std::uint64_t isqrt(std::uint64_t n);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Factorize n >= 1 (trial division, then Miller-Rabin + Pollard-Brent).
/// Throws std::invalid_argument for n == 0.
Factorization factorize(std::uint64_t n);

SquarefreeCore squarefree_core(std::uint64_t n);

/// Number of distinct prime divisors.
int omega(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

/// True iff -1 is a norm from Q(sqrt(M)): M is not 3 mod 4 and every odd
/// prime divisor of M is 1 mod 4 (equivalently M mod 8 in {1,2,5} with the
/// same prime condition). Throws std::invalid_argument if M is not squarefree.
bool is_global_norm_minus_one(std::uint64_t M);

/// Prime condition of the above on an existing factorization (no squarefree check).
bool all_odd_primes_1_mod_4(const Factorization& f);

}  // namespace quadnorm::arith
