#include <doctest.h>

#include <nlohmann/json.hpp>

#include "quadnorm/arith.hpp"
#include "quadnorm/criterion.hpp"

#include <stdexcept>

using namespace quadnorm;
using namespace quadnorm::criterion;
using quadfield::fundamental_unit;
using quadfield::make;
using quadfield::mul;
using u64 = std::uint64_t;

TEST_SUITE("criterion") {

TEST_CASE("gcd splits of the worked examples") {
    auto s = gcd_split(make(1478, 12, 15170), +1);  // 740 + 6 sqrt(M) = 2 (370 + 3 sqrt(M))
    CHECK(s.g == 2);
    CHECK(s.A_num == 370);
    CHECK(s.B_num == 3);
    CHECK(s.den == 1);

    s = gcd_split(make(99218, 264, 141245), +1);  // 22 = gcd(49610, 132)
    CHECK(s.g == 22);
    CHECK(s.A_num == 2255);
    CHECK(s.B_num == 6);
    CHECK(s.den == 1);

    s = gcd_split(make(2, 2, 2), -1);  // eps - 1 = sqrt(2)
    CHECK(s.g == 1);
    CHECK(s.A_num == 0);
    CHECK(s.B_num == 1);

    s = gcd_split(fundamental_unit(205).eps, +1);  // (45 + 3 sqrt(205))/2 = 3 (15 + sqrt(205))/2
    CHECK(s.g == 3);
    CHECK(s.A_num == 15);
    CHECK(s.B_num == 1);
    CHECK(s.den == 2);
    CHECK(s.A_str() == "15/2");
}

TEST_CASE("split reconstructs eps + sign exactly") {
    for (u64 M : {2ULL, 5ULL, 10ULL, 34ULL, 51ULL, 205ULL, 15170ULL, 141245ULL}) {
        auto fu = fundamental_unit(M);
        for (int sign : {+1, -1}) {
            auto s = gcd_split(fu.eps, sign);
            // g * (A + B sqrt M) in doubled coordinates
            BigInt scale = 2 / s.den;
            quadfield::QuadInt rebuilt{s.g * s.A_num * scale, s.g * s.B_num * scale, M};
            REQUIRE(rebuilt == fu.eps.plus_int(sign));
            // the cofactor carries no rational prime of g
            BigInt inner;
            mpz_gcd(inner.get_mpz_t(), s.A_num.get_mpz_t(), s.B_num.get_mpz_t());
            BigInt common;
            mpz_gcd(common.get_mpz_t(), inner.get_mpz_t(), s.g.get_mpz_t());
            REQUIRE(common == 1);
        }
    }
}

TEST_CASE("classify_norm on the survey spot values") {
    auto r = classify_norm(10);
    CHECK(r.predicted_S == -1);
    CHECK(r.m == 2);
    CHECK(r.m_prime == 2);
    CHECK(r.global_norm);

    r = classify_norm(34);
    CHECK(r.predicted_S == 1);
    CHECK(r.m == 2);
    CHECK(r.m_prime == 17);

    r = classify_norm(205);
    CHECK(r.predicted_S == 1);
    CHECK(r.m == 5);
    CHECK(r.n == 41);

    r = classify_norm(5);
    CHECK(r.predicted_S == -1);
    CHECK(r.m == 1);
    CHECK(r.m_prime == 1);

    r = classify_norm(2);  // A' = 0, m' = gcd(0, 2) = 2: the one special case
    CHECK(r.predicted_S == -1);
    CHECK(r.m == 2);
    CHECK(r.m_prime == 2);

    CHECK_THROWS_AS(classify_norm(12), std::invalid_argument);
}

TEST_CASE("the big radical worked example, digit for digit") {
    auto r = classify_norm(999826);
    CHECK(r.predicted_S == 1);
    CHECK(r.m == 41ULL * 89 * 137);
    CHECK(r.n == 2);
    CHECK(r.plus.g.get_str() ==
          "21082286734619551653000708969094423248037542899079230940776043942241398");
    CHECK(r.plus.A_num.get_str() ==
          "5269654604181931962753271711433450204598096091653697788648087227648861999187");
    CHECK(r.plus.B_num.get_str() ==
          "5270113123970195868835491287611281655343354587474034791159597224413298316");
    CHECK(r.plus.den == 1);
    const BigInt a_plus_1 = fundamental_unit(999826).eps.u / 2 + 1;
    CHECK(a_plus_1.get_str() ==
          "111096369357771588361607594999560877456109311842597308786432425709694998930608609351188"
          "823863817034706422630544237192750927410464023060264033743426");
}

TEST_CASE("relation generators and their norms") {
    auto r = classify_norm(15170);
    auto [alpha, beta] = relation_generators(r);
    CHECK(alpha == make(740, 6, 15170));  // 370 + 3 sqrt(M)
    CHECK(abs(alpha.norm()) == 370);
    CHECK(beta == make(246, 2, 15170));  // 123 + sqrt(M)
    CHECK(abs(beta.norm()) == 41);

    r = classify_norm(34);
    auto [a2, b2] = relation_generators(r);
    CHECK(a2 == make(12, 2, 34));  // 6 + sqrt(34)
    CHECK(abs(a2.norm()) == 2);
    CHECK(abs(b2.norm()) == 17);

    CHECK_THROWS_AS(relation_generators(classify_norm(51)), std::invalid_argument);
    CHECK_THROWS_AS(relation_generators(classify_norm(5)), std::invalid_argument);
}

TEST_CASE("support pairs for radicals without -1 as a global norm") {
    auto rep = relations_for_non_global_norm(15);
    CHECK(rep.m_plus == 5);
    CHECK(rep.m_minus == 3);
    CHECK_FALSE(rep.canonical);
    CHECK(rep.two_ramified);

    rep = relations_for_non_global_norm(51);
    CHECK(rep.canonical);

    rep = relations_for_non_global_norm(21);
    CHECK(rep.m_plus == 7);
    CHECK(rep.m_minus == 3);
    CHECK_FALSE(rep.two_ramified);

    CHECK_THROWS_AS(relations_for_non_global_norm(30), std::invalid_argument);  // even
    CHECK_THROWS_AS(relations_for_non_global_norm(34), std::invalid_argument);  // -1 is a norm
}

TEST_CASE("criterion properties on all eligible radicals up to 4000") {
    for (u64 M = 2; M <= 4000; ++M) {
        if (!arith::is_squarefree(M)) continue;
        if (!arith::is_global_norm_minus_one(M)) continue;
        auto r = classify_norm(M);
        // soundness against the directly computed norm
        REQUIRE(r.predicted_S == r.eps.norm_sign);
        if (r.predicted_S == 1) {
            REQUIRE(r.m * r.m_prime == M);
            auto [alpha, beta] = relation_generators(r);
            REQUIRE(abs(alpha.norm()) == r.m);
            REQUIRE(abs(beta.norm()) == r.n);
            // (eps+1) = eps * (conj(eps)+1) and (eps-1) = -eps * (conj(eps)-1)
            auto eps = r.eps.eps;
            REQUIRE(mul(eps, eps.conj().plus_int(1)) == eps.plus_int(1));
            quadfield::QuadInt neg{-eps.u, -eps.v, M};
            REQUIRE(mul(neg, eps.conj().plus_int(-1)) == eps.plus_int(-1));
        }
        if (M % 2 == 0) {
            // S = -1 iff b odd
            BigInt b = r.eps.eps.v / 2;
            REQUIRE((r.predicted_S == -1) == (mpz_odd_p(b.get_mpz_t()) != 0));
        } else {
            REQUIRE(r.m % 2 == 1);
        }
    }
}

TEST_CASE("json rendering uses the exact schema") {
    auto j = nlohmann::json::parse(to_json(classify_norm(34)));
    const std::vector<std::string> keys = {"M", "D",  "S",  "g", "A", "B",          "gp",
                                           "Ap", "Bp", "m", "mp", "n", "global_norm"};
    CHECK(j.size() == keys.size());
    for (const auto& k : keys) CHECK(j.contains(k));
    CHECK(j["M"] == 34);
    CHECK(j["D"] == 136);
    CHECK(j["S"] == 1);
    CHECK(j["m"] == 2);
    CHECK(j["mp"] == 17);
    CHECK(j["g"] == "6");
    CHECK(j["A"] == "6");
    CHECK(j["global_norm"] == true);
    // half-integer rendering
    auto h = nlohmann::json::parse(to_json(classify_norm(205)));
    CHECK(h["A"] == "15/2");
    CHECK(h["B"] == "1/2");
}

}  // TEST_SUITE
