#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quadnorm {

using BigInt = mpz_class;

namespace quadfield {

/// Field discriminant: M if M = 1 mod 4, else 4M.
std::uint64_t discriminant(std::uint64_t M);

/// Element (u + v*sqrt(M))/2 of the ring of integers of Q(sqrt(M)).
///
/// Coordinate invariants: for M = 1 mod 4, u = v mod 2 (half-integers allowed
/// when both are odd); otherwise u and v are both even. Norm and trace are
/// exact integers: T = u, N = (u^2 - M v^2)/4.
struct QuadInt {
    BigInt u{0};
    BigInt v{0};
    std::uint64_t M = 0;

    BigInt norm() const;
    BigInt trace() const { return u; }
    QuadInt conj() const { return {u, -v, M}; }
    /// Adds the rational integer k.
    QuadInt plus_int(long k) const { return {u + 2 * k, v, M}; }
    bool operator==(const QuadInt&) const = default;
    /// "a + b*sqrt(M)" for integral coordinates, "(u + v*sqrt(M))/2" otherwise.
    std::string str() const;
};

/// Validating constructor: checks parity invariants and that M is a squarefree
/// radical >= 2. Throws std::invalid_argument on violation.
QuadInt make(BigInt u, BigInt v, std::uint64_t M);

/// Exact product; throws std::invalid_argument on mixed radicals.
QuadInt mul(const QuadInt& x, const QuadInt& y);

struct FundamentalUnit {
    QuadInt eps;
    int norm_sign = 0;                 // N(eps), +1 or -1
    std::uint64_t period_length = 0;   // continued-fraction period used
};

/// Smallest unit > 1 of the maximal order of Q(sqrt(M)), by the continued
/// fraction of the quadratic irrational of discriminant D: convergent
/// denominators are exact big integers, the (P,Q) recurrence stays in machine
/// words (checked; M beyond ~4*10^15 is rejected as out of range).
/// norm_sign = (-1)^period_length.
FundamentalUnit fundamental_unit(std::uint64_t M);

/// Parity of the coordinate b of eps = a + b*sqrt(M), for even M, without
/// building the big-integer convergents (survey fast path).
int unit_b_parity(std::uint64_t M);

}  // namespace quadfield
}  // namespace quadnorm
