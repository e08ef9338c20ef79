#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "quadnorm/quadfield.hpp"

namespace quadnorm::criterion {

using quadfield::FundamentalUnit;
using quadfield::QuadInt;

/// eps + sign*1 = g * (A + B*sqrt(M)), with g the maximal positive rational
/// integer leaving the cofactor in the ring of integers. A and B are stored
/// as numerators over den (1 or 2); den = 2 marks half-odd coordinates.
struct SplitResult {
    BigInt g{1};
    BigInt A_num{0};
    BigInt B_num{0};
    int den = 1;
    int sign = +1;

    /// Decimal rendering, "15/2" style when den == 2.
    std::string A_str() const;
    std::string B_str() const;
};

SplitResult gcd_split(const QuadInt& eps, int sign);

/// Full record of the gcd criterion for one radical.
struct CriterionResult {
    std::uint64_t M = 0;
    std::uint64_t D = 0;
    FundamentalUnit eps;
    SplitResult plus;    // from eps + 1
    SplitResult minus;   // from eps - 1
    std::uint64_t m = 0;        // gcd(A, M), half-integer convention
    std::uint64_t m_prime = 0;  // gcd(A', M)
    std::uint64_t n = 0;        // M / m
    int predicted_S = 0;        // from the decision ladder, no norm computed
    bool global_norm = false;   // -1 in N(K^x); when false, predicted_S is forced +1
};

/// Predict S = N(eps) from the splits alone. Decision ladder: m=1 -> -1;
/// m>2 -> +1; m=2 and m'>2 -> +1; m=2 and m'=2 -> -1. For radicals where -1
/// is not a global norm the prediction contract does not apply: the splits
/// and supports are still computed, global_norm is false and S is +1.
/// Throws std::invalid_argument for non-squarefree M or M < 2.
CriterionResult classify_norm(std::uint64_t M);

/// Generators of the two non-canonical relations: alpha = C*m + B*sqrt(M)
/// generates the product of the ramified primes dividing m, beta = B*n +
/// C*sqrt(M) the complementary product; |N(alpha)| = m, |N(beta)| = n.
/// Requires predicted_S = +1 with -1 a global norm; throws otherwise.
std::pair<QuadInt, QuadInt> relation_generators(const CriterionResult& r);

/// Support pair extracted from eps +- 1 for radicals with -1 not a global
/// norm. canonical means {m_plus, m_minus} = {1, M}; for M = 3 mod 4 this is
/// equivalent to the principality of the prime above 2.
struct RelationReport {
    std::uint64_t M = 0;
    std::uint64_t m_plus = 0;   // support from eps + 1
    std::uint64_t m_minus = 0;  // support from eps - 1
    bool canonical = false;
    bool two_ramified = false;  // 2 ramifies (M even or M = 3 mod 4)
};

/// Throws std::invalid_argument if M is even or -1 is a global norm.
RelationReport relations_for_non_global_norm(std::uint64_t M);

/// Support pair for any squarefree M >= 2 (shared by relations_for_non_global_norm
/// and the q2 classification, which also accepts even M).
RelationReport support_pair(std::uint64_t M);

/// JSON rendering with fields exactly: M, D, S, g, A, B, gp, Ap, Bp, m, mp,
/// n, global_norm. Big integers are decimal strings.
std::string to_json(const CriterionResult& r);

}  // namespace quadnorm::criterion
