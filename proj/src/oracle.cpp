#include "quadnorm/oracle.hpp"

#include <cstdlib>
#include <stdexcept>

#include "quadnorm/arith.hpp"

namespace quadnorm::oracle {

namespace {

using u64 = std::uint64_t;

bool coords_valid(const BigInt& u, const BigInt& v, u64 M) {
    const bool ue = mpz_even_p(u.get_mpz_t()), ve = mpz_even_p(v.get_mpz_t());
    return M % 4 == 1 ? ue == ve : (ue && ve);
}

// lambda = (u + v*sqrt(M))/2 in I = [a, (P+sqrt(D))/2]?
bool member(const BigInt& u, const BigInt& v, const ideals::QuadIdeal& I) {
    const BigInt a(static_cast<unsigned long>(I.a));
    if (I.D % 2 == 0) {
        // basis {a, P/2 + sqrt(M)}: need a | (u/2 - (v/2)*(P/2))
        BigInt t = u / 2 - (v / 2) * BigInt(static_cast<unsigned long>(I.P / 2));
        return mpz_divisible_p(t.get_mpz_t(), a.get_mpz_t()) != 0;
    }
    BigInt t = u - v * BigInt(static_cast<unsigned long>(I.P));
    BigInt m2 = 2 * a;
    return mpz_divisible_p(t.get_mpz_t(), m2.get_mpz_t()) != 0;
}

}  // namespace

std::optional<QuadInt> brute_unit(u64 M, SearchBound bound) {
    if (!arith::is_squarefree(M) || M < 2) throw std::invalid_argument("brute_unit: bad radical");
    const BigInt bigM(static_cast<unsigned long>(M));
    for (u64 v = 1; v <= bound.max_v; ++v) {
        const BigInt mv2 = bigM * v * v;
        for (int sgn : {-1, +1}) {  // -4 first: smaller u, smaller unit
            BigInt uu = mv2 + 4 * sgn;
            if (uu <= 0) continue;
            if (!mpz_perfect_square_p(uu.get_mpz_t())) continue;
            BigInt u = sqrt(uu);
            if (!coords_valid(u, BigInt(static_cast<unsigned long>(v)), M)) continue;
            return QuadInt{u, BigInt(static_cast<unsigned long>(v)), M};
        }
    }
    return std::nullopt;
}

std::optional<QuadInt> brute_norm_equation(u64 M, std::int64_t target, SearchBound bound) {
    if (target == 0) throw std::invalid_argument("brute_norm_equation: target must be nonzero");
    if (!arith::is_squarefree(M) || M < 2) throw std::invalid_argument("brute_norm_equation: bad radical");
    const BigInt bigM(static_cast<unsigned long>(M));
    const BigInt t4 = 4 * BigInt(static_cast<long>(std::llabs(target)));
    for (u64 v = 0; v <= bound.max_v; ++v) {
        const BigInt mv2 = bigM * v * v;
        for (int sgn : {-1, +1}) {
            BigInt uu = mv2 + sgn * t4;
            if (uu < 0) continue;
            if (!mpz_perfect_square_p(uu.get_mpz_t())) continue;
            BigInt u = sqrt(uu);
            if (!coords_valid(u, BigInt(static_cast<unsigned long>(v)), M)) continue;
            return QuadInt{u, BigInt(static_cast<unsigned long>(v)), M};
        }
    }
    return std::nullopt;
}

Principality brute_is_principal(const ideals::QuadIdeal& I, u64 M, SearchBound bound) {
    if (quadfield::discriminant(M) != I.D) throw std::invalid_argument("brute_is_principal: radical/ideal mismatch");
    const BigInt bigM(static_cast<unsigned long>(M));
    const BigInt t4 = 4 * BigInt(static_cast<unsigned long>(I.a));
    for (u64 v = 0; v <= bound.max_v; ++v) {
        const BigInt mv2 = bigM * v * v;
        const BigInt vv(static_cast<unsigned long>(v));
        for (int sgn : {-1, +1}) {
            BigInt uu = mv2 + sgn * t4;
            if (uu < 0) continue;
            if (!mpz_perfect_square_p(uu.get_mpz_t())) continue;
            BigInt u = sqrt(uu);
            if (!coords_valid(u, vv, M)) continue;
            // |N| matches; (lambda) = I iff lambda is in I (equal norms)
            if (member(u, vv, I) || member(-u, vv, I)) return Principality::Yes;
        }
    }
    // conclusive iff the scan covered one fundamental domain modulo units:
    // some generator has v <= 2*sqrt(N(I)*eps/M) + 1
    const quadfield::FundamentalUnit fu = quadfield::fundamental_unit(M);
    mpf_class eps(0, 96);
    {
        mpf_class uf(fu.eps.u, 96), vf(fu.eps.v, 96), mf(bigM, 96);
        mpf_class sm = sqrt(mf);
        eps = (uf + vf * sm) / 2;
    }
    mpf_class need = 2 * sqrt(mpf_class(t4 / 4, 96) * eps / mpf_class(bigM, 96)) + 2;
    if (mpf_class(static_cast<unsigned long>(bound.max_v), 96) >= need) return Principality::No;
    return Principality::Inconclusive;
}

}  // namespace quadnorm::oracle
