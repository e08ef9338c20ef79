#include <doctest.h>

#include "quadnorm/arith.hpp"
#include "quadnorm/ideals.hpp"
#include "quadnorm/quadfield.hpp"

#include <random>
#include <set>
#include <stdexcept>

using namespace quadnorm;
using namespace quadnorm::ideals;
using u64 = std::uint64_t;

namespace {

std::vector<u64> primes_of(u64 M) {
    std::vector<u64> out;
    for (auto [p, e] : arith::factorize(M).factors) out.push_back(p);
    return out;
}

}  // namespace

TEST_SUITE("ideals") {

TEST_CASE("ramified ideals in standard form") {
    QuadIdeal q = ramified_ideal(2, 10);
    CHECK(q.a == 2);
    CHECK(q.P == 0);  // basis {2, sqrt(10)}
    q = ramified_ideal(2, 15);
    CHECK(q.a == 2);
    CHECK(q.P == 2);  // basis {2, 1 + sqrt(15)}
    q = ramified_ideal(5, 15170);
    CHECK(q.a == 5);
    CHECK_THROWS_AS(ramified_ideal(3, 10), std::invalid_argument);
    CHECK_THROWS_AS(ramified_ideal(2, 5), std::invalid_argument);
}

TEST_CASE("ideal products") {
    QuadIdeal I = ideal_product({2, 5}, 10);
    CHECK(I.a == 10);
    CHECK(I.P == 0);  // equals (sqrt(10)) = 10 Z + sqrt(10) Z
    CHECK(is_principal(I));
    CHECK(ideal_product({5, 41}, 141245).a == 205);
    QuadIdeal one = ideal_product({}, 10);
    CHECK(one.a == 1);
    CHECK(is_principal(one));
    CHECK_THROWS_AS(ideal_product({5, 5}, 15170), std::invalid_argument);
}

TEST_CASE("principality of the classified examples") {
    CHECK(is_principal(unit_ideal(10)));
    CHECK_FALSE(is_principal(ramified_ideal(2, 15)));
    CHECK(is_principal(ramified_ideal(2, 51)));
    CHECK(is_principal(ideal_product({2, 5, 37}, 15170)));  // norm 370
    CHECK_FALSE(is_principal(ramified_ideal(2, 10)));
    // q3 in Q(sqrt 15) has no generator: x^2 - 15 y^2 = +-3 is insoluble mod 5
    CHECK_FALSE(is_principal(ramified_ideal(3, 15)));
    CHECK(is_principal(ideal_product({3, 5}, 15)));  // (sqrt 15)
}

TEST_CASE("reduction reaches a reduced ideal and is idempotent") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 500; ++iter) {
        u64 M = 2 + rng() % 5000;
        while (!arith::is_squarefree(M)) ++M;
        const auto ps = primes_of(M);
        std::vector<u64> sub;
        for (u64 p : ps)
            if (rng() & 1) sub.push_back(p);
        QuadIdeal I = ideal_product(sub, M);
        // translate P by a multiple of 2a: same ideal, denormalized entry
        QuadIdeal J = I;
        J.P += 2 * J.a * static_cast<u64>(rng() % 5);
        QuadIdeal R = reduce(J);
        const u64 s = arith::isqrt(R.D);
        REQUIRE(R.a <= s);
        REQUIRE(reduce(R) == R);
        REQUIRE(is_principal(I) == is_principal(R));
    }
}

TEST_CASE("principal cycle closes and the canonical relation holds, M <= 10^4") {
    for (u64 M = 2; M <= 10000; ++M) {
        if (!arith::is_squarefree(M)) continue;
        REQUIRE(is_principal(ideal_product(primes_of(M), M)));
    }
}

TEST_CASE("relation lattice of the survey examples") {
    using V = std::vector<std::vector<int>>;
    CHECK(relation_lattice(10) == V{{1, 1}});
    CHECK(relation_lattice(34) == V{{0, 1}, {1, 0}, {1, 1}});
    auto l = relation_lattice(2ULL * 5 * 13 * 17 * 37);
    CHECK(std::find(l.begin(), l.end(), std::vector<int>{0, 1, 0, 1, 1}) != l.end());
    CHECK(l.size() == 3);  // the pair and the all-ones vector
    CHECK_THROWS_AS(relation_lattice(2ULL * 3 * 5 * 7 * 11 * 13 * 17 * 19 * 23 * 29 * 31 * 37 * 41),
                    std::invalid_argument);
}

TEST_CASE("lattice with the zero vector is a complement-closed group of order 2 or 4") {
    for (u64 M = 2; M <= 2000; ++M) {
        if (!arith::is_squarefree(M)) continue;
        if (!arith::is_global_norm_minus_one(M)) continue;
        const auto ps = primes_of(M);
        const int r = static_cast<int>(ps.size());
        auto l = relation_lattice(M);
        // always contains all-ones
        REQUIRE(std::find(l.begin(), l.end(), std::vector<int>(r, 1)) != l.end());
        REQUIRE((l.size() == 1 || l.size() == 3));
        std::set<std::vector<int>> s(l.begin(), l.end());
        for (const auto& e : l) {
            std::vector<int> comp(r);
            for (int i = 0; i < r; ++i) comp[i] = 1 - e[i];
            if (std::count(comp.begin(), comp.end(), 1) > 0) REQUIRE(s.count(comp) == 1);
        }
        // closed under symmetric difference together with the zero vector
        for (const auto& x : l)
            for (const auto& y : l) {
                std::vector<int> xy(r);
                int weight = 0;
                for (int i = 0; i < r; ++i) weight += (xy[i] = x[i] ^ y[i]);
                if (weight > 0) REQUIRE(s.count(xy) == 1);
            }
    }
}

TEST_CASE("q2 classification") {
    auto q = classify_q2(3);
    CHECK(q.principal);
    CHECK(q.canonical);
    q = classify_q2(30);
    CHECK_FALSE(q.principal);
    CHECK(((q.m == 5 && q.n == 6) || (q.m == 6 && q.n == 5)));
    q = classify_q2(95);
    CHECK_FALSE(q.principal);
    CHECK(((q.m == 5 && q.n == 19) || (q.m == 19 && q.n == 5)));
    CHECK_THROWS_AS(classify_q2(5), std::invalid_argument);
    CHECK_THROWS_AS(classify_q2(21), std::invalid_argument);
    // dichotomy enforced internally for M = 3 mod 4
    for (u64 M = 3; M <= 2000; M += 4) {
        if (!arith::is_squarefree(M)) continue;
        auto c = classify_q2(M);
        REQUIRE(c.canonical == c.principal);
    }
}

}  // TEST_SUITE
