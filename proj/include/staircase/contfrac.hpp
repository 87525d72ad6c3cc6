#pragma once

#include "staircase/perturbed.hpp"
#include "staircase/rational.hpp"

#include <vector>

namespace staircase {

/*
 * Finite continued fraction [a0; a1, ..., ak] with a0 >= 0 and a_i >= 1.
 * Canonical form has a_k > 1 unless the expansion is a single term.
 */
struct ContinuedFraction {
    std::vector<Int> a;

    Rat value() const {
        if (a.empty()) throw std::domain_error("empty continued fraction");
        Rat v(a.back());
        for (size_t i = a.size() - 1; i-- > 0;) v = a[i] + 1 / v;
        return v;
    }

    bool is_canonical() const {
        if (a.empty()) return false;
        for (size_t i = 1; i < a.size(); ++i)
            if (a[i] < 1) return false;
        return a.size() == 1 || a.back() > 1;
    }

    // [..., q, 1] and [..., q+1] denote the same rational.
    ContinuedFraction canonical() const {
        ContinuedFraction c = *this;
        if (c.a.size() > 1 && c.a.back() == 1) {
            c.a.pop_back();
            c.a.back() += 1;
        }
        return c;
    }

    friend bool equivalent(const ContinuedFraction& x, const ContinuedFraction& y) {
        return x.canonical().a == y.canonical().a;
    }
};

inline ContinuedFraction continued_fraction(const Rat& r) {
    if (r <= 0) throw std::domain_error("continued_fraction: argument must be positive");
    ContinuedFraction cf;
    Int p = r.get_num(), q = r.get_den();
    while (q != 0) {
        Int quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        cf.a.push_back(quot);
        p = q;
        q = rem;
    }
    return cf;  // Euclidean quotients give the canonical form directly
}

struct Convergent {
    Rat value;
    Int p, q;
    bool even;  // even-position convergents lie below the target
};

namespace detail {

// Quotients of base with the last position's parity forced: even when the
// target is base + ε (base is a best approximation from below), odd for base − ε.
inline std::vector<Int> parity_adjusted_quotients(const Rat& base, bool want_even_last) {
    std::vector<Int> a = continued_fraction(base).a;
    bool even_last = (a.size() - 1) % 2 == 0;
    if (even_last != want_even_last) {
        if (a.back() > 1) {
            a.back() -= 1;
            a.push_back(1);
        } else if (a.size() > 1) {  // non-canonical tail [..., q, 1]
            a.pop_back();
            a.back() += 1;
        } else {  // [n] -> [n-1; 1], valid for n >= 1 (and [0;1] for n = 1)
            a.back() -= 1;
            a.push_back(1);
        }
    }
    return a;
}

}  // namespace detail

/*
 * Convergents p_k/q_k with q_k <= max_denominator.  A rational input yields the
 * convergents of that rational; base ± ε yields the expansion in which the base
 * itself appears at even (+ε, below) or odd (−ε, above) position.
 */
inline std::vector<Convergent> convergents(const Perturbed& x, const Int& max_denominator) {
    if (x.base <= 0 || x <= Perturbed(Rat(0)))
        throw std::domain_error("convergents: argument must be positive");
    std::vector<Int> a;
    if (x.eps == 0)
        a = continued_fraction(x.base).a;
    else
        a = detail::parity_adjusted_quotients(x.base, x.eps > 0);
    std::vector<Convergent> out;
    Int p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // (p_{-1}, q_{-1}), (p_{-2}, q_{-2})
    for (size_t k = 0; k < a.size(); ++k) {
        Int p = a[k] * p0 + p1, q = a[k] * q0 + q1;
        if (q > max_denominator) break;
        out.push_back({make_rat(p, q), p, q, k % 2 == 0});
        p1 = p0; q1 = q0; p0 = p; q0 = q;
    }
    return out;
}

/*
 * Best approximations from below: even convergents together with the lower
 * semiconvergents c_{2k} ⊕ r·c_{2k+1}, sorted by denominator.  Requires an
 * irrational-model input (nonzero infinitesimal part).
 */
inline std::vector<Rat> best_approx_below(const Perturbed& x, const Int& max_denominator) {
    if (x.eps == 0)
        throw std::domain_error("best_approx_below: rational input; use base ± eps");
    if (x.base <= 0) throw std::domain_error("best_approx_below: argument must be positive");
    std::vector<Int> a = detail::parity_adjusted_quotients(x.base, x.eps > 0);
    // all convergents, without a denominator cutoff: P[j+2]/Q[j+2] = c_j
    std::vector<Int> P{0, 1}, Q{1, 0};
    for (const Int& ak : a) {
        P.push_back(ak * P[P.size() - 1] + P[P.size() - 2]);
        Q.push_back(ak * Q[Q.size() - 1] + Q[Q.size() - 2]);
    }
    std::vector<Rat> out;
    if (max_denominator >= 1) out.push_back(Rat(a[0]));  // c_0 = ⌊x⌋
    // mediants c_{2k} ⊕ r·c_{2k+1}; the ladder past the last odd convergent
    // (present when x = base − ε) is unbounded and cut by the denominator bound.
    for (size_t k = 0; 2 * k + 1 < a.size(); ++k) {
        size_t ie = 2 * k + 2, io = 2 * k + 3;  // shifted indices of c_{2k}, c_{2k+1}
        bool bounded = 2 * k + 2 < a.size();
        for (Int r = 1; !bounded || r <= a[2 * k + 2]; ++r) {
            Int p = P[ie] + r * P[io], q = Q[ie] + r * Q[io];
            if (q > max_denominator) return out;
            out.push_back(make_rat(p, q));
        }
    }
    return out;
}

}  // namespace staircase
