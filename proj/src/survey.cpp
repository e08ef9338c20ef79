#include "quadnorm/survey.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "quadnorm/arith.hpp"
#include "quadnorm/criterion.hpp"
#include "quadnorm/quadfield.hpp"

namespace quadnorm::survey {

namespace {

using u64 = std::uint64_t;

int effective_jobs(int jobs) {
    if (jobs > 0) return jobs;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static block decomposition of [lo, hi]: workers pull blocks through an
// atomic cursor, results are merged in block order, so the outcome does not
// depend on scheduling.
template <class Block, class Fn>
std::vector<Block> run_blocks(u64 lo, u64 hi, int jobs, Fn per_block) {
    jobs = effective_jobs(jobs);
    if (hi < lo) return {};
    const u64 span = hi - lo + 1;
    const u64 nblocks = std::min<u64>(span, std::max<u64>(1, static_cast<u64>(jobs) * 16));
    std::vector<Block> results(nblocks);
    std::atomic<u64> cursor{0};
    auto worker = [&] {
        for (;;) {
            const u64 b = cursor.fetch_add(1);
            if (b >= nblocks) return;
            const u64 blo = lo + span * b / nblocks;
            const u64 bhi = lo + span * (b + 1) / nblocks - 1;
            results[b] = per_block(blo, bhi);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return results;
}

bool eligible_radical(u64 M) {
    const u64 r8 = M % 8;
    if (r8 != 1 && r8 != 2 && r8 != 5) return false;
    const arith::Factorization f = arith::factorize(M);
    for (auto [p, e] : f.factors) {
        if (e > 1) return false;
        if (p != 2 && p % 4 != 1) return false;
    }
    return true;
}

struct MainBlock {
    MainCounters c;
    std::vector<MainRecord> recs;
};

}  // namespace

MainCounters survey_main(u64 BD, int jobs, std::vector<MainRecord>* records) {
    if (BD < 5) throw std::invalid_argument("survey_main: BD must be >= 5");
    const bool collect = records != nullptr;
    auto blocks = run_blocks<MainBlock>(5, BD, jobs, [collect](u64 lo, u64 hi) {
        MainBlock blk;
        for (u64 D = lo; D <= hi; ++D) {
            const int v2 = __builtin_ctzll(D);
            if (v2 != 0 && v2 != 3) continue;
            const u64 M = (v2 == 3) ? D / 4 : D;
            if (M % 4 == 3) continue;
            if (!eligible_radical(M)) continue;
            const criterion::CriterionResult r = criterion::classify_norm(M);
            blk.c.CD++;
            if (r.predicted_S == -1) {
                blk.c.Cm++;
                if (M % 2 == 0) blk.c.C22++;
            } else {
                blk.c.Cp++;
            }
            if (collect) blk.recs.push_back({D, M, r.m, r.m_prime, r.predicted_S});
        }
        return blk;
    });
    MainCounters total;
    for (auto& b : blocks) {
        total.CD += b.c.CD;
        total.Cm += b.c.Cm;
        total.Cp += b.c.Cp;
        total.C22 += b.c.C22;
        if (collect) records->insert(records->end(), b.recs.begin(), b.recs.end());
    }
    return total;
}

PartialCounters survey_partial(u64 bM, u64 BM, int jobs) {
    if (bM < 2 || BM < bM) throw std::invalid_argument("survey_partial: need 2 <= bM <= BM");
    auto blocks = run_blocks<PartialCounters>(bM, BM, jobs, [](u64 lo, u64 hi) {
        PartialCounters c;
        for (u64 M = lo; M <= hi; ++M) {
            if (!eligible_radical(M)) continue;
            const criterion::CriterionResult r = criterion::classify_norm(M);
            c.CM++;
            const u64 m = r.m, mp = r.m_prime;
            if (M % 2 == 0) {
                if (m == 2 && mp == 2) c.C22++;
                if (m == 2 && mp > 2) c.C2p++;
                if (m > 2 && mp == 2) c.Cm2++;
                if (m > 2 && mp > 2) c.Cmp++;
            } else {
                if (m == 1 && mp == 1) c.CC11++;
                if (m > 2 && mp > 2) c.CCmp++;
            }
        }
        return c;
    });
    PartialCounters total;
    for (auto& b : blocks) {
        total.CM += b.CM;
        total.C22 += b.C22;
        total.C2p += b.C2p;
        total.Cm2 += b.Cm2;
        total.Cmp += b.Cmp;
        total.CC11 += b.CC11;
        total.CCmp += b.CCmp;
    }
    return total;
}

FopResult fop_survey(u64 B, int jobs) {
    if (B < 1) throw std::invalid_argument("fop_survey: B must be >= 1");
    auto blocks = run_blocks<std::vector<FopEntry>>(1, B, jobs, [](u64 lo, u64 hi) {
        std::vector<FopEntry> out;
        for (u64 t = lo; t <= hi; ++t) {
            out.push_back({arith::squarefree_core(t * t + 4).core, -1, t});
            if (t < 3) continue;
            // eligibility is on the primes of the core, not of t^2 - 4 itself
            u64 core = 1;
            bool ok = true;
            for (auto [p, e] : arith::factorize(t * t - 4).factors) {
                if ((e & 1) == 0) continue;
                if (p != 2 && p % 4 != 1) {
                    ok = false;
                    break;
                }
                core *= p;
            }
            if (ok) out.push_back({core, +1, t});
        }
        return out;
    });
    // Concatenate in t order; only the first B appended entries survive.
    std::vector<FopEntry> all;
    all.reserve(std::min<u64>(2 * B, B + 65536));
    for (auto& b : blocks) {
        for (auto& e : b) {
            if (all.size() == B) break;
            all.push_back(e);
        }
        if (all.size() == B) break;
    }
    // First occurrence per radical: stable sort keeps append order within
    // equal M, so unique retains the earliest entry (-1 before +1 at equal t).
    std::stable_sort(all.begin(), all.end(),
                     [](const FopEntry& x, const FopEntry& y) { return x.M < y.M; });
    all.erase(std::unique(all.begin(), all.end(),
                          [](const FopEntry& x, const FopEntry& y) { return x.M == y.M; }),
              all.end());
    FopResult res;
    res.entries = std::move(all);
    for (const auto& e : res.entries) (e.sign == 1 ? res.Cp : res.Cm)++;
    return res;
}

ParityCounters parity_survey(u64 bM, u64 BM, int jobs) {
    if (BM < bM) throw std::invalid_argument("parity_survey: need bM <= BM");
    // radicals M = 2 mod 8 with bM < M <= BM
    u64 first = bM + 1;
    first += (2 + 8 - first % 8) % 8;
    if (first > BM) return {};
    const u64 n = (BM - first) / 8 + 1;
    auto blocks = run_blocks<ParityCounters>(0, n - 1, jobs, [first](u64 lo, u64 hi) {
        ParityCounters c;
        for (u64 k = lo; k <= hi; ++k) {
            const u64 M = first + 8 * k;
            if (!eligible_radical(M)) continue;
            c.CM++;
            if (quadfield::unit_b_parity(M) == 0)
                c.CP++;
            else
                c.CI++;
        }
        return c;
    });
    ParityCounters total;
    for (auto& b : blocks) {
        total.CM += b.CM;
        total.CP += b.CP;
        total.CI += b.CI;
    }
    return total;
}

namespace {

// zeta(s) by Euler-Maclaurin with two correction terms, summed small-first.
long double zeta_s(long double s) {
    const int N = 20000;
    long double sum = 0;
    for (int n = N - 1; n >= 1; --n) sum += powl(static_cast<long double>(n), -s);
    const long double Nf = N;
    sum += powl(Nf, 1 - s) / (s - 1) + powl(Nf, -s) / 2 + s * powl(Nf, -s - 1) / 12;
    return sum;
}

// L(s, chi_4) = sum (-1)^k (2k+1)^(-s), alternating tail correction.
long double L4(long double s) {
    const int N = 200000;
    long double sum = 0;
    for (int k = N - 1; k >= 0; --k) {
        const long double term = powl(2.0L * k + 1, -s);
        sum += (k & 1) ? -term : term;
    }
    const long double fN = powl(2.0L * N + 1, -s);
    const long double fpN = -2 * s * powl(2.0L * N + 1, -s - 1);
    sum += (N & 1 ? -1 : 1) * (fN / 2 - fpN / 4);
    return sum;
}

// A(s) = prod_{p = 1 mod 4} (1 - p^-s), by
// A(s)^2 = A(2s) * zeta(2s)(1-2^-2s) / ( zeta(s)(1-2^-s) L(s,chi4) ).
long double euler_A(long double s, int depth) {
    if (depth == 0) return 1.0L;  // A(64) = 1 - O(5^-64)
    const long double a2 = euler_A(2 * s, depth - 1);
    const long double num = a2 * zeta_s(2 * s) * (1 - powl(2, -2 * s));
    const long double den = zeta_s(s) * (1 - powl(2, -s)) * L4(s);
    return sqrtl(num / den);
}

}  // namespace

ReferenceConstants reference_constants() {
    const long double pi = 3.14159265358979323846264338327950288L;
    ReferenceConstants rc;
    rc.delta_gcd = (6 / (pi * pi)) * (6 / (pi * pi)) * 1.5L;
    long double prod = 1;
    for (int k = 0; k < 64; ++k) prod *= 1 - powl(2, -(2.0L * k + 1));
    rc.stevenhagen_p = 1 - prod;
    rc.rieger = 3 / (2 * pi) * sqrtl(euler_A(2, 5));
    return rc;
}

std::string format_ratio(u64 num, u64 den, int sig_digits) {
    return format_decimal(static_cast<long double>(num) / static_cast<long double>(den), sig_digits);
}

std::string format_decimal(long double x, int sig_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*Lg", sig_digits, x);
    return buf;
}

}  // namespace quadnorm::survey
