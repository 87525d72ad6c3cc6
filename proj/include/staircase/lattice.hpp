#pragma once

#include "staircase/perturbed.hpp"
#include "staircase/rational.hpp"

#include <algorithm>
#include <vector>

namespace staircase {

/*
 * Orbit multiplicities (m1 on the short orbit β₁ of action a, m2 on the long
 * orbit β₂ of action b) on the boundary of the ellipsoid E(a, b).
 */
struct OrbitSet {
    Int m1, m2;
    Rat a;
    Perturbed b;

    Perturbed action() const { return Rat(m1) * Perturbed(a) + Rat(m2) * b; }
};

// Σ_{j=1}^{M} ⌊j·θ⌋ for perturbed θ, via the Euclidean floor-sum.
inline Int floor_multiples_sum(const Perturbed& theta, const Int& M) {
    if (M < 0) throw std::domain_error("floor_multiples_sum: negative count");
    const Int &p = theta.base.get_num(), &q = theta.base.get_den();
    Int s = floor_sum(M + 1, q, p, 0);
    if (theta.eps < 0) s -= M / q;  // j·p/q integral exactly when q | j
    return s;
}

/*
 * Grading of an orbit set: m1 + m2 + 2m1m2 + Σ CZ(β₁^i) + Σ CZ(β₂^j), with
 * CZ(γ^k) = 2⌊kθ⌋+1 and monodromy angles a/b for β₁, b/a for β₂.
 */
inline Int orbit_grading(const OrbitSet& s) {
    if (s.m1 < 0 || s.m2 < 0) throw std::domain_error("orbit_grading: negative multiplicity");
    Perturbed theta = s.b * (1 / s.a);                       // angle of β₂
    Perturbed theta_tilde = Rat(s.a) * perturbed_recip(s.b); // angle of β₁
    Int gr = s.m1 + s.m2 + 2 * s.m1 * s.m2;
    gr += s.m1 + 2 * floor_multiples_sum(theta_tilde, s.m1);
    gr += s.m2 + 2 * floor_multiples_sum(theta, s.m2);
    return gr;
}

/*
 * Independent oracle: gr = 2(N − 1) where N counts lattice points (x, y) with
 * x, y >= 0 and ax + by <= a·m1 + b·m2.  Direct enumeration; desk scale only.
 */
inline Int orbit_grading_lattice(const OrbitSet& s) {
    Perturbed bound = s.action();
    Int count = 0;
    for (Int y = 0;; ++y) {
        Perturbed rest = bound - Rat(y) * s.b;
        if (rest < Perturbed(Rat(0))) break;
        count += perturbed_floor(rest * (1 / s.a)) + 1;
    }
    return 2 * (count - 1);
}

struct CapEntry {
    Perturbed value;  // ℓ·a + m·b
    Int l, m;
};

/*
 * The sorted sequence of values ℓa + mb, ℓ, m >= 0, through index k_max
 * (N₀ = 0).  Enumerates by a bounded-value sweep with geometric growth.
 */
inline std::vector<CapEntry> cap_sequence(const Rat& a, const Perturbed& b, long k_max) {
    if (a <= 0 || b <= Perturbed(Rat(0)))
        throw std::domain_error("cap_sequence: parameters must be positive");
    if (k_max < 0) throw std::domain_error("cap_sequence: negative index");
    Rat V = std::max(a, b.base);
    while (true) {
        std::vector<CapEntry> entries;
        Perturbed bound{V};
        for (Int l = 0; Rat(l) * a <= V; ++l) {
            Perturbed base{Rat(l) * a};
            for (Int m = 0;; ++m) {
                Perturbed v = base + Rat(m) * b;
                if (v > bound) break;
                entries.push_back({v, l, m});
            }
        }
        if (entries.size() > static_cast<size_t>(k_max)) {
            std::sort(entries.begin(), entries.end(),
                      [](const CapEntry& x, const CapEntry& y) { return x.value < y.value; });
            entries.resize(k_max + 1);
            return entries;
        }
        V *= 2;
    }
}

}  // namespace staircase
