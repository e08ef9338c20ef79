#pragma once

#include <cstdint>
#include <optional>

#include "quadnorm/ideals.hpp"
#include "quadnorm/quadfield.hpp"

namespace quadnorm::oracle {

using quadfield::QuadInt;

struct SearchBound {
    std::uint64_t max_v = 1;
};

/// Smallest unit > 1 with v-coordinate <= bound, by ascending scan of v
/// solving u^2 = M v^2 +- 4 for a perfect square. Empty if none in range.
std::optional<QuadInt> brute_unit(std::uint64_t M, SearchBound bound);

/// Element of the ring of integers with |N| = |target| and v <= bound, if
/// one exists in range (v ascending, -4|target| tried before +4|target|).
std::optional<QuadInt> brute_norm_equation(std::uint64_t M, std::int64_t target, SearchBound bound);

enum class Principality { No, Yes, Inconclusive };

/// Ground-truth principality by norm-equation search with ideal-membership
/// verification. A negative answer is conclusive only when the scan covers a
/// fundamental domain modulo units (v up to ~2*sqrt(N(I)*eps/M)); otherwise
/// Inconclusive is returned instead of a silent false negative.
Principality brute_is_principal(const ideals::QuadIdeal& I, std::uint64_t M, SearchBound bound);

}  // namespace quadnorm::oracle
