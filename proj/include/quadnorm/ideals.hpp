#pragma once

#include <cstdint>
#include <memory>
#include <unordered_set>
#include <vector>

namespace quadnorm::ideals {

/// Primitive integral ideal of the maximal order with Z-basis
/// {a, (P + sqrt(D))/2}: a is the ideal norm, 0 <= P < 2a, P^2 = D mod 4a.
struct QuadIdeal {
    std::uint64_t a = 1;
    std::uint64_t P = 0;
    std::uint64_t D = 0;
    bool operator==(const QuadIdeal&) const = default;
};

QuadIdeal unit_ideal(std::uint64_t M);

/// The unique prime ideal above a ramified prime q (q | D); its square is (q).
/// Throws std::invalid_argument if q does not ramify.
QuadIdeal ramified_ideal(std::uint64_t q, std::uint64_t M);

/// Product of the prime ideals above distinct ramified primes dividing M
/// (CRT on the P coordinates; the result is primitive since the norm is
/// squarefree). The empty set gives the unit ideal.
QuadIdeal ideal_product(const std::vector<std::uint64_t>& primes, std::uint64_t M);

/// Reduction by the continued-fraction step operator; terminates in
/// O(log(a / sqrt(D))) steps. The result is a reduced ideal equivalent to I.
QuadIdeal reduce(const QuadIdeal& I);

/// The cycle of reduced ideals equivalent to (1), walked over exactly one
/// period. Cached per discriminant: concurrent readers, single initializer.
class PrincipalCycle {
  public:
    static std::shared_ptr<const PrincipalCycle> for_discriminant(std::uint64_t D);

    bool contains(const QuadIdeal& reduced) const;
    std::size_t length() const { return states_.size(); }

  private:
    explicit PrincipalCycle(std::uint64_t D);
    std::uint64_t D_;
    std::unordered_set<std::uint64_t> states_;  // packed (a, P mod 2a)
};

/// Principality in the ordinary sense: membership of the reduced form in the
/// principal cycle.
bool is_principal(const QuadIdeal& I);

/// All nonzero e in {0,1}^r (over the sorted primes dividing M) whose ideal
/// product is principal, in ascending binary order; always contains the
/// all-ones vector and is closed under complement. Throws if omega(M) > cap.
std::vector<std::vector<int>> relation_lattice(std::uint64_t M, int cap = 12);

/// Classification of the prime above 2 for M where 2 ramifies (M even or
/// M = 3 mod 4), with the support pair from eps +- 1. For M = 3 mod 4 the
/// dichotomy "canonical pair <=> q2 principal" is verified and a violation
/// raises std::logic_error.
struct Q2Classification {
    bool principal = false;
    std::uint64_t m = 0;  // support from eps + 1
    std::uint64_t n = 0;  // support from eps - 1
    bool canonical = false;
};

Q2Classification classify_q2(std::uint64_t M);

}  // namespace quadnorm::ideals
