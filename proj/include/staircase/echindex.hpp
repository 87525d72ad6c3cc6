#pragma once

#include "staircase/lattice.hpp"
#include "staircase/paths.hpp"
#include "staircase/perturbed.hpp"
#include "staircase/weights.hpp"

#include <vector>

namespace staircase {

enum class Level { symplectization, cobordism_X, blowup_E, stabilized };

/*
 * Data of a curve as the index formulas see it.  The ends_b1/ends_b2 lists are
 * multiplicities of the ends on the short/long orbit (negative ends for the
 * compactified-complement level, positive ends for the blowup level).  δ is
 * declared analytic input, never inferred.
 */
struct CurveData {
    Level level = Level::cobordism_X;
    Int d = 0;                  // degree
    std::vector<Int> z;         // blowup constraint vector
    std::vector<Int> ends_b1;
    std::vector<Int> ends_b2;
    int k = 1;                  // number of components
    Perturbed x;                // long-axis parameter of E(1, x)
    Int delta = 0;
};

namespace detail {

// a + ⌊a/x⌋ summed over an end list; insists the ratios are non-integral,
// which the perturbed model guarantees for eps != 0.
inline Int end_terms_recip(const std::vector<Int>& ends, const Perturbed& x) {
    Perturbed inv = perturbed_recip(x);
    Int s = 0;
    for (const Int& a : ends) {
        if (a < 1) throw std::domain_error("end multiplicities must be >= 1");
        Perturbed v = Rat(a) * inv;
        if (v.eps == 0 && is_integer(v.base))
            throw std::domain_error("a/x is integral; use a perturbed x");
        s += a + perturbed_floor(v);
    }
    return s;
}

inline Int end_terms_mult(const std::vector<Int>& ends, const Perturbed& x) {
    Int s = 0;
    for (const Int& b : ends) {
        if (b < 1) throw std::domain_error("end multiplicities must be >= 1");
        Perturbed v = Rat(b) * x;
        if (v.eps == 0 && is_integer(v.base))
            throw std::domain_error("b*x is integral; use a perturbed x");
        s += b + perturbed_floor(v);
    }
    return s;
}

inline Int sum(const std::vector<Int>& v) {
    Int s = 0;
    for (const Int& x : v) s += x;
    return s;
}

}  // namespace detail

// Fredholm index in the compactified complement: 2(−k + 3d − Σ(a+⌊a/x⌋) − Σ(b+⌊bx⌋)).
inline Int fredholm_index_X(const CurveData& c) {
    if (c.level != Level::cobordism_X) throw std::invalid_argument("fredholm_index_X: wrong level");
    return 2 * (-Int(c.k) + 3 * c.d - detail::end_terms_recip(c.ends_b1, c.x) -
                detail::end_terms_mult(c.ends_b2, c.x));
}

// ECH index in the compactified complement: d² + 3d − gr(orbit set).
inline Int ech_index_X(const Int& d, const OrbitSet& set) {
    return d * d + 3 * d - orbit_grading(set);
}

// ECH index in the blowup: gr(positive asymptotics) − Σ(z_i + z_i²).
inline Int ech_index_E(const CurveData& c, const OrbitSet& set) {
    if (c.level != Level::blowup_E) throw std::invalid_argument("ech_index_E: wrong level");
    Int s = 0;
    for (const Int& m : c.z) s += m + m * m;
    return orbit_grading(set) - s;
}

// Fredholm index in the blowup (connected curve):
// ½ind = −1 + #ends + Σ(a+⌊a/x⌋) + Σ(b+⌊bx⌋) − Σz_i.
inline Int fredholm_index_E(const CurveData& c) {
    if (c.level != Level::blowup_E) throw std::invalid_argument("fredholm_index_E: wrong level");
    Int half = -1 + Int(c.ends_b1.size()) + Int(c.ends_b2.size()) +
               detail::end_terms_recip(c.ends_b1, c.x) + detail::end_terms_mult(c.ends_b2, c.x) -
               detail::sum(c.z);
    return 2 * half;
}

// Symplectic area of the curve in the compactified complement: dμ − n₁ − n₂x.
inline Perturbed action_X(const Int& d, const Rat& mu, const Int& n1, const Int& n2,
                          const Perturbed& x) {
    return Rat(d) * Perturbed(mu) - Perturbed(Rat(n1)) - Rat(n2) * x;
}

// Area in the blowup: n₁ + n₂x − Σ z_i w_i, with w the ball weights of x.
inline Perturbed action_E(const Int& n1, const Int& n2, const Perturbed& x,
                          const std::vector<Int>& z, const std::vector<Rat>& w) {
    if (z.size() != w.size()) throw std::invalid_argument("action_E: z/w length mismatch");
    Perturbed a = Perturbed(Rat(n1)) + Rat(n2) * x;
    for (size_t i = 0; i < z.size(); ++i) a = a - Perturbed(Rat(z[i]) * w[i]);
    return a;
}

// Symplectization level: action(top) − action(bottom).
inline Perturbed action_symp(const OrbitSet& top, const OrbitSet& bottom) {
    return top.action() - bottom.action();
}

/*
 * Writhe bounds: upper bound for a positive end (p_i = ⌊a_iθ⌋), lower bound
 * for a negative end (p_i = ⌈a_iθ⌉); both are ΣΣ extremum(p_i a_j, p_j a_i) − Σp_i
 * over all ordered pairs including the diagonal.
 */
inline Int writhe_bound(const Perturbed& theta, const std::vector<Int>& parts, bool positive_end) {
    if (parts.empty()) throw std::domain_error("writhe_bound: empty partition");
    std::vector<Int> p;
    for (const Int& a : parts) {
        Perturbed v = Rat(a) * theta;
        p.push_back(positive_end ? perturbed_floor(v) : perturbed_ceil(v));
    }
    Int s = 0;
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = 0; j < parts.size(); ++j) {
            Int u = p[i] * parts[j], v = p[j] * parts[i];
            s += positive_end ? std::max(u, v) : std::min(u, v);
        }
    for (const Int& pi : p) s -= pi;
    return s;
}

/*
 * Residual of the improved index inequality, I − ind − 2δ − 2A(C), for a
 * blowup-level curve with positive ends only.  Nonnegative whenever the data
 * models a somewhere-injective curve with the declared δ.
 */
inline Rat index_residual(const CurveData& c, const OrbitSet& set) {
    Int I = ech_index_E(c, set);
    Int ind = fredholm_index_E(c);
    Rat A(0);
    if (!c.ends_b1.empty()) {
        Perturbed theta_tilde = perturbed_recip(c.x);
        A += area_from_partition(theta_tilde, c.ends_b1).area_C;
    }
    if (!c.ends_b2.empty()) A += area_from_partition(c.x, c.ends_b2).area_C;
    return Rat(I - ind - 2 * c.delta) - 2 * A;
}

struct DiffVector {
    std::vector<Rat> z, w, diff;
    Rat lambda;

    Rat diff_dot_diff() const {
        Rat s(0);
        for (const Rat& d : diff) s += d * d;
        return s;
    }
};

// diff = λw − z with λ = (z·w)/(w·w); w·diff = 0 and z·z = λ²(w·w) + diff·diff.
inline DiffVector diff_vector(const std::vector<Rat>& z, const std::vector<Rat>& w) {
    if (z.size() != w.size()) throw std::invalid_argument("diff_vector: length mismatch");
    Rat ww = dot(w, w);
    if (ww == 0) throw std::domain_error("diff_vector: zero weight vector");
    DiffVector d;
    d.z = z;
    d.w = w;
    d.lambda = dot(z, w) / ww;
    for (size_t i = 0; i < z.size(); ++i) d.diff.push_back(d.lambda * w[i] - z[i]);
    return d;
}

enum class StabKind { top_level, symplectization_no_neg, neck_component };

/*
 * Data for the stabilized (higher-dimensional) index formulas.  r/s are end
 * multiplicities on β₁/β₂, t the multiplicities on the large Morse–Bott round
 * orbit of size S; p is the single negative multiplicity of a neck component.
 */
struct StabilizedEndData {
    int k = 0;  // stabilization dimension (top_level) or component count
    Rat S = 0;
    Int d = 0;
    std::vector<Int> r, s, t;
    Perturbed x;
    Int p = 0;
};

inline bool large_S_ok(const StabilizedEndData& e) {
    return Perturbed(e.S) >= Rat(3 * e.d * e.d) * e.x;
}

inline Int stabilized_index(const StabilizedEndData& e, StabKind kind) {
    if (!e.t.empty() && e.S <= 0)
        throw std::invalid_argument("stabilized_index: round-orbit ends require explicit S");
    Perturbed inv = perturbed_recip(e.x);
    auto fl = [](const Perturbed& v) { return perturbed_floor(v); };
    switch (kind) {
        case StabKind::top_level: {
            Int n1 = e.r.size(), n2 = e.s.size(), n3 = e.t.size();
            Int ind = Int(e.k - 1) * (2 - n1 - n2 - n3) + 6 * e.d;
            for (const Int& ri : e.r)
                ind -= 2 * ri + (2 * fl(Rat(ri) * inv) + 1) + e.k * (2 * rat_floor(Rat(ri) / e.S) + 1);
            for (const Int& sj : e.s)
                ind -= 2 * sj + (2 * fl(Rat(sj) * e.x) + 1) +
                       e.k * (2 * fl(Rat(sj) * e.x * (1 / e.S)) + 1);
            for (const Int& tl : e.t)
                ind -= 2 * tl + (2 * rat_floor(Rat(tl) * e.S) + 1) +
                       (2 * fl(Rat(tl) * e.S * perturbed_recip(e.x)) + 1) +
                       Int(e.k - 1) * (2 * tl - 1);
            return ind;
        }
        case StabKind::symplectization_no_neg: {
            Int half = Int(e.k) - 1 + Int(e.r.size()) + Int(e.s.size());
            for (const Int& ri : e.r) half += ri + fl(Rat(ri) * inv);
            for (const Int& sj : e.s) half += sj + fl(Rat(sj) * e.x);
            return 2 * half;
        }
        case StabKind::neck_component: {
            Int half = -1 + Int(e.r.size()) + Int(e.s.size());
            for (const Int& ri : e.r) half += ri + fl(Rat(ri) * inv);
            for (const Int& sj : e.s) half += sj + fl(Rat(sj) * e.x);
            half -= e.p + fl(Rat(e.p) * inv);
            return 2 * half;
        }
    }
    throw std::invalid_argument("stabilized_index: unknown kind");
}

/*
 * ½ind(u) − (m/2)·ind(ũ) for an m-fold cover u of ũ (ends r/s on β₁/β₂):
 * (k−1)(1−m) − k(N − mÑ) − Σ⌊r_i/x⌋ − Σ⌊s_j x⌋ + m(Σ⌊r̃_i/x⌋ + Σ⌊s̃_j x⌋).
 */
inline Int cover_index_defect(const std::vector<Int>& r, const std::vector<Int>& s, int m,
                              const std::vector<Int>& rt, const std::vector<Int>& st, int k,
                              const Perturbed& x) {
    if (detail::sum(r) != m * detail::sum(rt) || detail::sum(s) != m * detail::sum(st))
        throw std::invalid_argument("cover_index_defect: covering multiplicities inconsistent");
    Perturbed inv = perturbed_recip(x);
    Int v = Int(k - 1) * (1 - m);
    v -= Int(k) * (Int(r.size() + s.size()) - m * Int(rt.size() + st.size()));
    for (const Int& ri : r) v -= perturbed_floor(Rat(ri) * inv);
    for (const Int& sj : s) v -= perturbed_floor(Rat(sj) * x);
    for (const Int& ri : rt) v += m * perturbed_floor(Rat(ri) * inv);
    for (const Int& sj : st) v += m * perturbed_floor(Rat(sj) * x);
    return v;
}

// Lower bound for double points in the neck: Σ_{i<r} (r−i)·a_i, parts ascending.
inline Int neck_double_points(const std::vector<Int>& parts) {
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] > parts[i + 1])
            throw std::invalid_argument("neck_double_points: parts must be ascending");
    Int s = 0;
    const Int r = parts.size();
    for (size_t i = 0; i < parts.size(); ++i) s += (r - Int(i) - 1) * parts[i];
    return s;
}

}  // namespace staircase
