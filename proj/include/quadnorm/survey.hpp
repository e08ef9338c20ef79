#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quadnorm::survey {

/// Counters of the main discriminant survey over D in [5, BD]:
/// CD eligible discriminants, Cm the S=-1 cases, Cp the S=+1 cases,
/// C22 the even-radical m=m'=2 cases. Invariant: Cm + Cp = CD, C22 <= Cm.
struct MainCounters {
    std::uint64_t CD = 0, Cm = 0, Cp = 0, C22 = 0;
};

/// One record per eligible discriminant. m is always the support from
/// eps+1; mp is the support from eps-1 (computed by the decision ladder
/// only when m = 2, recorded here unconditionally).
struct MainRecord {
    std::uint64_t D = 0, M = 0, m = 0, mp = 0;
    int S = 0;
};

MainCounters survey_main(std::uint64_t BD, int jobs, std::vector<MainRecord>* records = nullptr);

/// Six-way classification of radicals M in [bM, BM] with -1 a global norm:
/// C22 + C2p + Cm2 + Cmp + CC11 + CCmp = CM.
struct PartialCounters {
    std::uint64_t CM = 0, C22 = 0, C2p = 0, Cm2 = 0, Cmp = 0, CC11 = 0, CCmp = 0;
};

PartialCounters survey_partial(std::uint64_t bM, std::uint64_t BM, int jobs);

/// First-occurrence entry of the trace-ordered enumeration: M is the
/// squarefree core of t^2+4 (sign -1) or t^2-4 (sign +1).
struct FopEntry {
    std::uint64_t M = 0;
    int sign = 0;
    std::uint64_t t = 0;
};

struct FopResult {
    std::vector<FopEntry> entries;  // sorted by M, one per field
    std::uint64_t Cp = 0, Cm = 0;
    std::uint64_t total() const { return Cp + Cm; }
};

/// Trace-ordered first-occurrence survey: for ascending t append the core of
/// t^2+4 with sign -1, then (t >= 3, all odd primes of the core 1 mod 4) the
/// core of t^2-4 with sign +1; keep the first B appended entries, keep each
/// radical's earliest entry, sort by radical.
FopResult fop_survey(std::uint64_t B, int jobs = 1);

/// Parity of b in eps = a + b*sqrt(M) over M = 2 mod 8 in (bM, BM]:
/// CP counts b even, CI counts b odd (equivalently S = -1).
struct ParityCounters {
    std::uint64_t CM = 0, CP = 0, CI = 0;
};

ParityCounters parity_survey(std::uint64_t bM, std::uint64_t BM, int jobs);

/// Reference constants displayed next to measured densities, all to >= 12
/// digits: delta_gcd = (6/pi^2)^2 * 3/2, Stevenhagen's P, and Rieger's
/// coefficient (3/(2 pi)) * prod_{p = 1 mod 4} (1 - p^-2)^(1/2).
struct ReferenceConstants {
    long double delta_gcd;
    long double stevenhagen_p;
    long double rieger;
};

ReferenceConstants reference_constants();

/// Decimal string with the given number of significant digits.
std::string format_ratio(std::uint64_t num, std::uint64_t den, int sig_digits = 10);
std::string format_decimal(long double x, int sig_digits = 10);

}  // namespace quadnorm::survey
