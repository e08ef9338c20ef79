#include "quadnorm/ideals.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "quadnorm/arith.hpp"
#include "quadnorm/criterion.hpp"
#include "quadnorm/quadfield.hpp"

namespace quadnorm::ideals {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using i128 = __int128;

// States pack into one u64 key; reduced ideals have a <= sqrt(D) < 2^31 and
// P < 2a, well within 32 bits each for the discriminants we accept.
constexpr u64 kMaxDisc = u64(1) << 52;

u64 pack(u64 a, u64 Pmod) { return (a << 32) | Pmod; }

void check_ideal(const QuadIdeal& I) {
    if (I.a == 0 || I.D == 0) throw std::invalid_argument("QuadIdeal: empty");
    const i128 lhs = i128(I.P) * I.P - i128(I.D);
    if (lhs % (i128(4) * I.a) != 0) throw std::invalid_argument("QuadIdeal: P^2 != D mod 4a");
}

// One cycle step on a reduced ideal in window representation
// (sqrt(D)-2a < P <= floor(sqrt(D))).
void rho(u64& a, i64& P, u64 D, u64 s) {
    const u64 Q = 2 * a;
    const u64 q = (static_cast<u64>(P) + s) / Q;
    const i64 Pn = static_cast<i64>(q * Q) - P;
    a = static_cast<u64>((static_cast<i64>(D) - Pn * Pn) / static_cast<i64>(Q)) / 2;
    P = Pn;
}

u64 canonical_P(i64 P, u64 a) {
    const i64 m = static_cast<i64>(2 * a);
    i64 r = P % m;
    if (r < 0) r += m;
    return static_cast<u64>(r);
}

}  // namespace

QuadIdeal unit_ideal(std::uint64_t M) {
    const u64 D = quadfield::discriminant(M);
    return {1, D & 1, D};
}

QuadIdeal ramified_ideal(u64 q, u64 M) {
    if (!arith::is_squarefree(M) || M < 2) throw std::invalid_argument("ramified_ideal: bad radical");
    const u64 D = quadfield::discriminant(M);
    if (q == 2) {
        if (M % 4 == 1) throw std::invalid_argument("ramified_ideal: 2 does not ramify");
        return {2, M % 2 == 0 ? 0ULL : 2ULL, D};
    }
    if (q % 2 == 0 || M % q != 0) throw std::invalid_argument("ramified_ideal: q not ramified");
    // odd q | M: P = q works for odd D, P = 0 for D = 4M
    QuadIdeal I{q, (D & 1) ? q : 0, D};
    check_ideal(I);
    return I;
}

QuadIdeal ideal_product(const std::vector<u64>& primes, u64 M) {
    const u64 D = quadfield::discriminant(M);
    u64 a = 1;
    i128 P = D & 1;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (primes[i] == primes[j]) throw std::invalid_argument("ideal_product: repeated prime");
        const QuadIdeal Q = ramified_ideal(primes[i], M);
        // CRT: x = P mod 2a, x = Q.P mod 2*Q.a, moduli sharing exactly the factor 2
        const u64 m1 = 2 * a, m2 = 2 * Q.a;
        i128 diff = (i128(Q.P) - P) % i128(m2);
        if (diff < 0) diff += m2;
        // solve (m1/2)*k = diff/2 mod (m2/2)
        u64 inv = 1;
        {
            // modular inverse of m1/2 mod m2/2 (m2/2 = q or 2, both tiny)
            const u64 mod = m2 / 2;
            const u64 base = (m1 / 2) % mod;
            i64 t0 = 0, t1 = 1;
            i64 r0 = static_cast<i64>(mod), r1 = static_cast<i64>(base);
            while (r1 != 0) {
                const i64 qq = r0 / r1;
                t0 -= qq * t1;
                std::swap(t0, t1);
                r0 -= qq * r1;
                std::swap(r0, r1);
            }
            if (mod == 1)
                inv = 0;
            else
                inv = static_cast<u64>(t0 < 0 ? t0 + static_cast<i64>(mod) : t0);
        }
        const u64 k = static_cast<u64>((i128(diff / 2) * inv) % (m2 / 2));
        P = (P + i128(m1) * k) % (i128(m1) * m2 / 2);
        a *= Q.a;
    }
    QuadIdeal R{a, static_cast<u64>(P), D};
    check_ideal(R);
    return R;
}

QuadIdeal reduce(const QuadIdeal& I) {
    check_ideal(I);
    const u64 D = I.D;
    if (D >= kMaxDisc) throw std::overflow_error("reduce: discriminant out of range");
    const u64 s = arith::isqrt(D);
    u64 a = I.a;
    i64 P = static_cast<i64>(I.P % (2 * I.a));
    for (int iter = 0; iter < 4000; ++iter) {
        const i64 m = static_cast<i64>(2 * a);
        P %= m;
        if (P < 0) P += m;
        if (a > s) {
            if (P > static_cast<i64>(a)) P -= m;  // minimize |P|
        } else {
            if (P > static_cast<i64>(s)) P -= m;  // window (s - 2a, s]
            if (P >= static_cast<i64>(2 * a) - static_cast<i64>(s))
                return {a, canonical_P(P, a), D};
        }
        const i128 c = (i128(P) * P - i128(D)) / (i128(4) * a);
        a = static_cast<u64>(c < 0 ? -c : c);
        P = -P;
    }
    throw std::logic_error("reduce: did not terminate");
}

PrincipalCycle::PrincipalCycle(u64 D) : D_(D) {
    const u64 s = arith::isqrt(D);
    // reduced representative of (1): largest P <= s with P = D mod 2
    const i64 P1 = static_cast<i64>(s - ((s ^ D) & 1));
    u64 a = 1;
    i64 P = P1;
    do {
        states_.insert(pack(a, canonical_P(P, a)));
        rho(a, P, D, s);
    } while (!(a == 1 && P == P1));
}

std::shared_ptr<const PrincipalCycle> PrincipalCycle::for_discriminant(u64 D) {
    if (D >= kMaxDisc) throw std::overflow_error("PrincipalCycle: discriminant out of range");
    static std::mutex mu;
    static std::map<u64, std::shared_ptr<const PrincipalCycle>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(D);
    if (it != cache.end()) return it->second;
    auto cyc = std::shared_ptr<const PrincipalCycle>(new PrincipalCycle(D));
    cache.emplace(D, cyc);
    return cyc;
}

bool PrincipalCycle::contains(const QuadIdeal& reduced) const {
    return states_.count(pack(reduced.a, reduced.P % (2 * reduced.a))) != 0;
}

bool is_principal(const QuadIdeal& I) {
    const QuadIdeal R = reduce(I);
    return PrincipalCycle::for_discriminant(I.D)->contains(R);
}

std::vector<std::vector<int>> relation_lattice(u64 M, int cap) {
    const arith::Factorization f = arith::factorize(M);
    const int r = static_cast<int>(f.factors.size());
    if (r > cap) throw std::invalid_argument("relation_lattice: too many ramified primes");
    std::vector<u64> primes;
    for (auto [p, e] : f.factors) {
        if (e > 1) throw std::invalid_argument("relation_lattice: M must be squarefree");
        primes.push_back(p);
    }
    const u64 D = quadfield::discriminant(M);
    auto cycle = PrincipalCycle::for_discriminant(D);
    std::vector<std::vector<int>> out;
    for (u64 k = 1; k < (u64(1) << r); ++k) {
        std::vector<u64> sub;
        for (int i = 0; i < r; ++i)
            if ((k >> (r - 1 - i)) & 1) sub.push_back(primes[i]);
        const QuadIdeal R = reduce(ideal_product(sub, M));
        if (cycle->contains(R)) {
            std::vector<int> e(r);
            for (int i = 0; i < r; ++i) e[i] = static_cast<int>((k >> (r - 1 - i)) & 1);
            out.push_back(std::move(e));
        }
    }
    return out;
}

Q2Classification classify_q2(u64 M) {
    if (M % 4 == 1) throw std::invalid_argument("classify_q2: 2 does not ramify");
    const criterion::RelationReport rep = criterion::support_pair(M);  // validates M
    Q2Classification q;
    q.principal = is_principal(ramified_ideal(2, M));
    q.m = rep.m_plus;
    q.n = rep.m_minus;
    q.canonical = rep.canonical;
    if (M % 4 == 3 && q.canonical != q.principal)
        throw std::logic_error("classify_q2: dichotomy violated");
    return q;
}

}  // namespace quadnorm::ideals
