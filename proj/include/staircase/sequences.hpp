#pragma once

#include "staircase/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace staircase {

/*
 * The Fibonacci-derived integer families driving the staircase:
 *   h = (1, 3, 8, 21, 55, ...)   even-placed Fibonacci numbers
 *   g = (1, 2, 5, 13, 34, ...)   odd-placed Fibonacci numbers
 *   Q_n = h_{2n+1},  P_n = Q_{n+1},  ℓ_n = h_{2n+2}/3,  t_n = ℓ_n − ℓ_{n−1}
 * Q, ℓ, t all satisfy x_n = 7x_{n−1} − x_{n−2}; h, g satisfy 3x_{n+1} = x_n + x_{n+2}.
 */
class GhostSequences {
  public:
    explicit GhostSequences(int n_max) : n_max_(n_max) {
        if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
        int hk = 2 * n_max + 5;
        h_.reserve(hk + 1);
        h_ = {0, 1, 3};  // h_[0] unused sentinel so h_[k] = h_k
        for (int k = 3; k <= hk; ++k) h_.push_back(3 * h_[k - 1] - h_[k - 2]);
        g_ = {0, 1, 2};
        for (int k = 3; k <= hk; ++k) g_.push_back(3 * g_[k - 1] - g_[k - 2]);
        ell_ = {0, 1};  // ell_[i] = ℓ_{i-1}, so ℓ_{−1} = 0 is admitted
        for (int n = 1; n <= n_max + 2; ++n) ell_.push_back(7 * ell_[n] - ell_[n - 1]);
    }

    int n_max() const { return n_max_; }

    const Int& h(int k) const { return h_.at(k); }
    const Int& g(int k) const { return g_.at(k); }
    const Int& Q(int n) const { return h(2 * n + 1); }
    const Int& P(int n) const { return Q(n + 1); }
    const Int& ell(int n) const { return ell_.at(n + 1); }  // defined for n >= −1
    Int t(int n) const { return ell(n) - ell(n - 1); }
    Rat b(int n) const { return make_rat(P(n), Q(n)); }
    Rat mu(int n) const {
        if (n == 0) return Rat(17, 6);
        return (1 + b(n)) / 3;
    }

  private:
    int n_max_;
    std::vector<Int> h_, g_, ell_;
};

enum class Identity {
    fib1_h,      // 3h_{n+1} = h_n + h_{n+2}
    fib1_g,      // 3g_{n+1} = g_n + g_{n+2}
    fibt,        // t_n − t_{n−1} = 5ℓ_{n−1}
    fibq,        // Q_n = ℓ_n + ℓ_{n−1}
    fib2,        // h²_{n+2} − h_{n+1}h_{n+3} = 1
    fibh,        // h²_{2n+2} − (3h_{2n+2} − h_{2n+3}) = h_{2n+1}(h_{2n+3} − 1) + 1
    recurrel_a,  // Q_{n+1}ℓ_n = Q_nℓ_{n+1} + 1
    recurrel_b,  // ℓ_n² = ℓ_{n−1}ℓ_{n+1} + 1
    recurrel_c,  // ℓ_nP_n = ℓ_{n−1}P_{n+1} + 8
    pntn,        // P_nt_n − P_{n−1}t_{n+1} = 2
    lnbn,        // ⌊ℓ_{n−1}Q_n/P_n⌋ = ℓ_{n−2}
    fineq,       // 5(ℓ_n² − 7ℓ_nℓ_{n−1} + ℓ_{n−1}²)... reduces to ℓ_{n−1}² − ℓ_nℓ_{n−2} = 1
    nine_ell,    // 9ℓ_n² − P_nQ_n = 1
    tnk,         // P_n(ℓ_n − 7ℓ_{n−1}) + Q_nℓ_{n−1} = 8
};

struct IdentityResult {
    bool pass;
    Int lhs, rhs;  // witness on failure (and record on success)
};

inline IdentityResult check_identity(Identity id, int n) {
    GhostSequences s(std::max(n + 3, 3));
    auto eq = [](Int l, Int r) { return IdentityResult{l == r, l, r}; };
    switch (id) {
        case Identity::fib1_h: return eq(3 * s.h(n + 1), s.h(n) + s.h(n + 2));
        case Identity::fib1_g: return eq(3 * s.g(n + 1), s.g(n) + s.g(n + 2));
        case Identity::fibt: return eq(s.t(n) - s.t(n - 1), 5 * s.ell(n - 1));
        case Identity::fibq: return eq(s.Q(n), s.ell(n) + s.ell(n - 1));
        case Identity::fib2: return eq(s.h(n + 2) * s.h(n + 2) - s.h(n + 1) * s.h(n + 3), 1);
        case Identity::fibh:
            return eq(s.h(2 * n + 2) * s.h(2 * n + 2) - (3 * s.h(2 * n + 2) - s.h(2 * n + 3)),
                      s.h(2 * n + 1) * (s.h(2 * n + 3) - 1) + 1);
        case Identity::recurrel_a: return eq(s.Q(n + 1) * s.ell(n), s.Q(n) * s.ell(n + 1) + 1);
        case Identity::recurrel_b: return eq(s.ell(n) * s.ell(n), s.ell(n - 1) * s.ell(n + 1) + 1);
        case Identity::recurrel_c: return eq(s.ell(n) * s.P(n), s.ell(n - 1) * s.P(n + 1) + 8);
        case Identity::pntn: return eq(s.P(n) * s.t(n) - s.P(n - 1) * s.t(n + 1), 2);
        case Identity::lnbn:
            return eq(rat_floor(make_rat(s.ell(n - 1) * s.Q(n), s.P(n))), s.ell(n - 2));
        case Identity::fineq:
            return eq(s.ell(n - 1) * s.ell(n - 1) - s.ell(n) * s.ell(n - 2), 1);
        case Identity::nine_ell: return eq(9 * s.ell(n) * s.ell(n) - s.P(n) * s.Q(n), 1);
        case Identity::tnk:
            return eq(s.P(n) * (s.ell(n) - 7 * s.ell(n - 1)) + s.Q(n) * s.ell(n - 1), 8);
    }
    throw std::invalid_argument("unknown identity");
}

inline std::optional<Identity> identity_from_name(const std::string& name) {
    if (name == "fib1_h") return Identity::fib1_h;
    if (name == "fib1_g") return Identity::fib1_g;
    if (name == "fibt") return Identity::fibt;
    if (name == "fibq") return Identity::fibq;
    if (name == "fib2") return Identity::fib2;
    if (name == "fibh") return Identity::fibh;
    if (name == "recurrel_a") return Identity::recurrel_a;
    if (name == "recurrel_b") return Identity::recurrel_b;
    if (name == "recurrel_c") return Identity::recurrel_c;
    if (name == "pntn") return Identity::pntn;
    if (name == "lnbn") return Identity::lnbn;
    if (name == "fineq") return Identity::fineq;
    if (name == "nine_ell") return Identity::nine_ell;
    if (name == "tnk") return Identity::tnk;
    return std::nullopt;
}

}  // namespace staircase
