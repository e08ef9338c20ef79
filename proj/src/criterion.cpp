#include "quadnorm/criterion.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

#include "quadnorm/arith.hpp"

namespace quadnorm::criterion {

namespace {

using u64 = std::uint64_t;

BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// gcd(|A_num|, M); with den == 2 this is the gcd on the odd numerator, which
// equals the half-integer-convention support since M is odd in that branch.
u64 support_of(const SplitResult& s, u64 M) {
    BigInt g = big_gcd(s.A_num, BigInt(static_cast<unsigned long>(M)));
    return g.get_ui();
}

std::string frac_str(const BigInt& num, int den) {
    return den == 1 ? num.get_str() : num.get_str() + "/2";
}

}  // namespace

std::string SplitResult::A_str() const { return frac_str(A_num, den); }
std::string SplitResult::B_str() const { return frac_str(B_num, den); }

SplitResult gcd_split(const QuadInt& eps, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("gcd_split: sign must be +-1");
    SplitResult r;
    r.sign = sign;
    if (mpz_even_p(eps.u.get_mpz_t())) {
        // integral coordinates: a = u/2, b = v/2
        BigInt t = eps.u / 2 + sign;
        BigInt b = eps.v / 2;
        r.g = big_gcd(t, b);  // gcd(0, x) = |x|; t = 0 only for eps = 1 +- ...
        if (r.g == 0) throw std::invalid_argument("gcd_split: eps -+ 1 is zero");
        r.A_num = t / r.g;
        r.B_num = b / r.g;
        r.den = 1;
        if (eps.M % 4 == 1 && mpz_odd_p(r.A_num.get_mpz_t()) && mpz_odd_p(r.B_num.get_mpz_t())) {
            // (A + B*sqrt(M))/2 is still integral here, so 2g is the true
            // maximal rational factor.
            r.g *= 2;
            r.den = 2;
        }
    } else {
        // half-odd coordinates (M = 1 mod 4): numerators u + 2*sign and v are odd
        BigInt U = eps.u + 2 * sign;
        r.g = big_gcd(U, eps.v);
        r.A_num = U / r.g;
        r.B_num = eps.v / r.g;
        r.den = 2;
    }
    return r;
}

CriterionResult classify_norm(u64 M) {
    CriterionResult r;
    r.M = M;
    r.global_norm = arith::is_global_norm_minus_one(M);  // validates squarefree
    r.D = quadfield::discriminant(M);
    r.eps = quadfield::fundamental_unit(M);
    r.plus = gcd_split(r.eps.eps, +1);
    r.minus = gcd_split(r.eps.eps, -1);
    r.m = support_of(r.plus, M);
    r.m_prime = support_of(r.minus, M);
    r.n = M / r.m;
    if (r.m == 1)
        r.predicted_S = -1;
    else if (r.m > 2)
        r.predicted_S = 1;
    else
        r.predicted_S = (r.m_prime > 2) ? 1 : -1;
    if (!r.global_norm) r.predicted_S = 1;  // forced: -1 not a global norm
    return r;
}

std::pair<QuadInt, QuadInt> relation_generators(const CriterionResult& r) {
    if (r.predicted_S != 1 || !r.global_norm)
        throw std::invalid_argument("relation_generators: no non-canonical relation");
    // alpha = C*m + B*sqrt(M) = A + B*sqrt(M): the primitive part of eps+1.
    const BigInt m(static_cast<unsigned long>(r.m)), n(static_cast<unsigned long>(r.n));
    QuadInt alpha, beta;
    if (r.plus.den == 1) {
        alpha = QuadInt{2 * r.plus.A_num, 2 * r.plus.B_num, r.M};
        beta = QuadInt{2 * r.plus.B_num * n, 2 * (r.plus.A_num / m), r.M};
    } else {
        alpha = QuadInt{r.plus.A_num, r.plus.B_num, r.M};
        beta = QuadInt{r.plus.B_num * n, r.plus.A_num / m, r.M};
    }
    return {alpha, beta};
}

RelationReport support_pair(u64 M) {
    CriterionResult c = classify_norm(M);
    RelationReport rep;
    rep.M = M;
    rep.m_plus = c.m;
    rep.m_minus = c.m_prime;
    rep.canonical = (c.m == 1 && c.m_prime == M) || (c.m == M && c.m_prime == 1);
    rep.two_ramified = (M % 2 == 0) || (M % 4 == 3);
    return rep;
}

RelationReport relations_for_non_global_norm(u64 M) {
    if (M % 2 == 0) throw std::invalid_argument("relations_for_non_global_norm: M must be odd");
    if (arith::is_global_norm_minus_one(M))
        throw std::invalid_argument("relations_for_non_global_norm: -1 is a global norm");
    return support_pair(M);
}

std::string to_json(const CriterionResult& r) {
    nlohmann::json j;
    j["M"] = r.M;
    j["D"] = r.D;
    j["S"] = r.predicted_S;
    j["g"] = r.plus.g.get_str();
    j["A"] = r.plus.A_str();
    j["B"] = r.plus.B_str();
    j["gp"] = r.minus.g.get_str();
    j["Ap"] = r.minus.A_str();
    j["Bp"] = r.minus.B_str();
    j["m"] = r.m;
    j["mp"] = r.m_prime;
    j["n"] = r.n;
    j["global_norm"] = r.global_norm;
    return j.dump();
}

}  // namespace quadnorm::criterion
