#include "quadnorm/quadfield.hpp"

#include <stdexcept>

#include "quadnorm/arith.hpp"

namespace quadnorm::quadfield {

namespace {

using u64 = std::uint64_t;

// Partial quotients of the quadratic irrational omega of discriminant D,
// omega = (1+sqrt(D))/2 for D odd, sqrt(D)/2 for D even. The complete
// quotients (P_i + sqrt(D))/Q_i are reduced for i >= 1, so the first return
// of (P,Q) to (P_1,Q_1) closes the period.
class CfExpansion {
  public:
    explicit CfExpansion(u64 D) : D_(D), s_(arith::isqrt(D)) {
        const u64 P0 = D & 1, Q0 = 2;
        a0_ = (P0 + s_) / Q0;
        P_ = a0_ * Q0 - P0;
        Q_ = (D_ - P_ * P_) / Q0;
        P1_ = P_;
        Q1_ = Q_;
    }

    u64 a0() const { return a0_; }
    u64 index() const { return i_; }
    bool wrapped() const { return wrapped_; }

    u64 next() {
        const u64 a = (P_ + s_) / Q_;
        P_ = a * Q_ - P_;
        Q_ = (D_ - P_ * P_) / Q_;
        ++i_;
        wrapped_ = (P_ == P1_ && Q_ == Q1_);
        return a;
    }

  private:
    u64 D_, s_, a0_;
    u64 P_, Q_, P1_, Q1_;
    u64 i_ = 0;
    bool wrapped_ = false;
};

void check_radical(u64 M) {
    if (M < 2) throw std::invalid_argument("radical must be >= 2");
    if (!arith::is_squarefree(M)) throw std::invalid_argument("radical must be squarefree");
}

// (P,Q) and the products in the recurrence fit u64 as long as D stays below
// 2^52; larger inputs would also be hopeless to expand anyway.
constexpr u64 kMaxDisc = u64(1) << 52;

}  // namespace

u64 discriminant(u64 M) { return M % 4 == 1 ? M : 4 * M; }

BigInt QuadInt::norm() const {
    BigInt n = u * u - BigInt(static_cast<unsigned long>(M)) * v * v;
    return n / 4;
}

std::string QuadInt::str() const {
    const std::string ms = std::to_string(M);
    if (mpz_even_p(u.get_mpz_t()) && mpz_even_p(v.get_mpz_t())) {
        BigInt a = u / 2, b = v / 2;
        return a.get_str() + " + " + b.get_str() + "*sqrt(" + ms + ")";
    }
    return "(" + u.get_str() + " + " + v.get_str() + "*sqrt(" + ms + "))/2";
}

QuadInt make(BigInt u, BigInt v, u64 M) {
    check_radical(M);
    const bool ue = mpz_even_p(u.get_mpz_t()), ve = mpz_even_p(v.get_mpz_t());
    if (M % 4 == 1) {
        if (ue != ve) throw std::invalid_argument("QuadInt: u and v must have equal parity");
    } else {
        if (!ue || !ve) throw std::invalid_argument("QuadInt: u and v must both be even");
    }
    return {std::move(u), std::move(v), M};
}

QuadInt mul(const QuadInt& x, const QuadInt& y) {
    if (x.M != y.M) throw std::invalid_argument("QuadInt: mixed radicals");
    const BigInt m(static_cast<unsigned long>(x.M));
    BigInt u = x.u * y.u + m * x.v * y.v;
    BigInt v = x.u * y.v + x.v * y.u;
    return {u / 2, v / 2, x.M};
}

FundamentalUnit fundamental_unit(u64 M) {
    check_radical(M);
    const u64 D = discriminant(M);
    if (D >= kMaxDisc) throw std::overflow_error("fundamental_unit: discriminant out of range");

    CfExpansion cf(D);
    BigInt qprev = 0, qcur = 1;  // q_{i-2}, q_{i-1}
    for (;;) {
        const u64 a = cf.next();
        BigInt q = a * qcur + qprev;
        if (cf.wrapped()) {
            // period l = cf.index(); unit is q_{l-1}*omega + (q_l - a0*q_{l-1})
            BigInt r = q - cf.a0() * qcur;
            FundamentalUnit fu;
            if (D & 1) {
                fu.eps = QuadInt{2 * r + qcur, qcur, M};
            } else {
                fu.eps = QuadInt{2 * r, 2 * qcur, M};
            }
            fu.period_length = cf.index();
            fu.norm_sign = (fu.period_length & 1) ? -1 : 1;
            return fu;
        }
        qprev = std::move(qcur);
        qcur = std::move(q);
    }
}

int unit_b_parity(u64 M) {
    check_radical(M);
    if (M % 4 == 1) throw std::invalid_argument("unit_b_parity: M must not be 1 mod 4");
    const u64 D = 4 * M;
    if (D >= kMaxDisc) throw std::overflow_error("unit_b_parity: discriminant out of range");

    // b = q_{l-1}; track convergent denominators mod 2 only.
    CfExpansion cf(D);
    unsigned qprev = 0, qcur = 1;
    for (;;) {
        const u64 a = cf.next();
        const unsigned q = (static_cast<unsigned>(a & 1) * qcur + qprev) & 1;
        if (cf.wrapped()) return static_cast<int>(qcur);
        qprev = qcur;
        qcur = q;
    }
}

}  // namespace quadnorm::quadfield
