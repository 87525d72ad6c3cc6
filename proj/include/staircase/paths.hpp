#pragma once

#include "staircase/contfrac.hpp"
#include "staircase/perturbed.hpp"
#include "staircase/rational.hpp"

#include <vector>

namespace staircase {

struct LatticePath {
    std::vector<std::pair<Int, Int>> edges;  // (Δx, Δy), Δx > 0
    bool concave;  // true: maximal path below y=θx; false: minimal path above

    Int width() const {
        Int w = 0;
        for (auto& e : edges) w += e.first;
        return w;
    }
    Int height() const {
        Int h = 0;
        for (auto& e : edges) h += e.second;
        return h;
    }
    // twice the area between the path and the x-axis
    Int twice_area_under() const {
        Int a = 0, y = 0;
        for (auto& e : edges) {
            a += e.first * (2 * y + e.second);
            y += e.second;
        }
        return a;
    }
    // y-value at integer abscissa x (path is piecewise linear)
    Rat at(const Int& x) const {
        Int cx = 0, cy = 0;
        for (auto& e : edges) {
            if (x <= cx + e.first) return Rat(cy) + make_rat((x - cx) * e.second, e.first);
            cx += e.first;
            cy += e.second;
        }
        if (x == cx) return Rat(cy);
        throw std::out_of_range("LatticePath::at: x beyond path");
    }
};

struct EndPartition {
    std::vector<Int> parts;  // ordered so that ⌊a_iθ⌋/a_i is non-increasing
    LatticePath path;
};

namespace detail {

inline Int cross(const std::pair<Int, Int>& u, const std::pair<Int, Int>& v) {
    return u.first * v.second - u.second * v.first;
}

// Convex-hull scan of (x, f(x)), x = 0..m; upper = true keeps the concave
// (from below) chain, collapsing collinear points.
template <class F>
LatticePath hull_path(const F& f, const Int& m, bool upper) {
    std::vector<std::pair<Int, Int>> st;
    for (Int x = 0; x <= m; ++x) {
        std::pair<Int, Int> p{x, f(x)};
        while (st.size() >= 2) {
            auto &a = st[st.size() - 2], &b = st[st.size() - 1];
            std::pair<Int, Int> u{b.first - a.first, b.second - a.second};
            std::pair<Int, Int> v{p.first - b.first, p.second - b.second};
            Int c = cross(u, v);
            if (upper ? c >= 0 : c <= 0)
                st.pop_back();
            else
                break;
        }
        st.push_back(p);
    }
    LatticePath path;
    path.concave = upper;
    for (size_t i = 1; i < st.size(); ++i) {
        Int dx = st[i].first - st[i - 1].first, dy = st[i].second - st[i - 1].second;
        Int g = gcd(dx, dy);
        for (Int j = 0; j < g; ++j) path.edges.emplace_back(dx / g, dy / g);
    }
    return path;
}

}  // namespace detail

/*
 * Partition conditions at a positive end: horizontal displacements of the
 * maximal concave lattice path below y = θx from (0,0) to (m, ⌊mθ⌋).
 * Direct hull construction; O(m) evaluations of ⌊xθ⌋.
 */
inline EndPartition partition_pos(const Perturbed& theta, const Int& m) {
    if (m < 1) throw std::domain_error("partition_pos: m must be >= 1");
    if (theta <= Perturbed(Rat(0))) throw std::domain_error("partition_pos: theta must be positive");
    EndPartition ep;
    ep.path = detail::hull_path(
        [&](const Int& x) { return perturbed_floor(Rat(x) * theta); }, m, true);
    for (auto& e : ep.path.edges) ep.parts.push_back(e.first);
    return ep;
}

/*
 * Same partition via the greedy recursion: p⁺_θ(m) = p⁺_θ(m−k) ⊔ (k) where k
 * is the largest best-below-approximation denominator <= m.  O(log m)-ish; the
 * path lists the primitive edge (k, ⌊kθ⌋) per extracted part, largest first.
 */
inline EndPartition partition_pos_recursive(const Perturbed& theta, const Int& m) {
    if (m < 1) throw std::domain_error("partition_pos_recursive: m must be >= 1");
    std::vector<Rat> best = best_approx_below(theta, m);
    EndPartition ep;
    ep.path.concave = true;
    Int rest = m;
    size_t i = best.size();
    while (rest > 0) {
        while (i > 0 && Int(best[i - 1].get_den()) > rest) --i;
        if (i == 0) throw std::logic_error("partition_pos_recursive: no denominator fits");
        Int k = best[i - 1].get_den();
        ep.parts.push_back(k);
        ep.path.edges.emplace_back(k, perturbed_floor(Rat(k) * theta));
        rest -= k;
    }
    return ep;
}

/*
 * Partition conditions at a negative end: horizontal displacements of the
 * minimal convex lattice path above y = θx ending at (m, ⌈mθ⌉).
 */
inline EndPartition partition_neg(const Perturbed& theta, const Int& m) {
    if (m < 1) throw std::domain_error("partition_neg: m must be >= 1");
    if (theta <= Perturbed(Rat(0))) throw std::domain_error("partition_neg: theta must be positive");
    EndPartition ep;
    ep.path = detail::hull_path(
        [&](const Int& x) { return perturbed_ceil(Rat(x) * theta); }, m, false);
    for (auto& e : ep.path.edges) ep.parts.push_back(e.first);
    return ep;
}

// κ(θ, s) = s·(sθ − ⌊sθ⌋)
inline Perturbed kappa(const Perturbed& theta, const Int& s) {
    if (s < 1) throw std::domain_error("kappa: s must be >= 1");
    Perturbed st = Rat(s) * theta;
    return Rat(s) * (st - Perturbed(Rat(perturbed_floor(st))));
}

/*
 * A(θ, t): area between y = θx, the vertical segment at x = t, and the maximal
 * concave path.  Uses the greedy partition, so it stays cheap for large t.
 * Returns 2A as a perturbed value.
 */
inline Perturbed twice_area_A(const Perturbed& theta, const Int& t) {
    if (t < 1) throw std::domain_error("twice_area_A: t must be >= 1");
    EndPartition ep = partition_pos_recursive(theta, t);
    return Rat(t) * Rat(t) * theta - Perturbed(Rat(ep.path.twice_area_under()));
}

/*
 * A_C for an arbitrary (eq-ai ordered) end partition: L + b/2 where L counts
 * lattice points strictly above the partition path and below y = θx, and b
 * counts interior lattice points of the path's edges.  Carries the Pick data
 * for the polygon under the path so tests can cross-check.
 */
struct PartitionArea {
    Rat area_C;             // A_C = L + b/2; zero exactly for the maximal path
    Int lattice_L;          // L
    Int interior_b;         // b
    Int twice_area_maxsum;  // ΣΣ max(p_i a_j, p_j a_i) = 2·(area under path)
    Int pick_T;             // lattice points in the closed polygon under the path
    Int pick_B;             // boundary lattice points of that polygon
    std::vector<Int> p;     // p_i = ⌊a_i θ⌋
};

inline PartitionArea area_from_partition(const Perturbed& theta, const std::vector<Int>& parts) {
    if (parts.empty()) throw std::domain_error("area_from_partition: empty partition");
    PartitionArea out;
    Int m = 0;
    for (const Int& a : parts) {
        if (a < 1) throw std::domain_error("area_from_partition: parts must be positive");
        out.p.push_back(perturbed_floor(Rat(a) * theta));
        m += a;
    }
    const size_t n = parts.size();
    // eq-ai ordering: ⌊a_iθ⌋/a_i non-increasing
    for (size_t i = 0; i + 1 < n; ++i)
        if (out.p[i] * parts[i + 1] < out.p[i + 1] * parts[i])
            throw std::invalid_argument("area_from_partition: parts not ordered by slope");
    LatticePath path;
    path.concave = true;
    for (size_t i = 0; i < n; ++i) path.edges.emplace_back(parts[i], out.p[i]);

    out.lattice_L = 0;
    Int floorsum = 0;
    for (Int x = 1; x <= m; ++x) {
        floorsum += perturbed_floor(Rat(x) * theta);
        out.lattice_L += perturbed_floor(Rat(x) * theta) - rat_floor(path.at(x));
    }
    out.interior_b = 0;
    for (size_t i = 0; i < n; ++i) out.interior_b += gcd(parts[i], out.p[i]) - 1;
    out.area_C = Rat(out.lattice_L) + make_rat(out.interior_b, 2);

    out.twice_area_maxsum = 0;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            out.twice_area_maxsum += std::max(out.p[i] * parts[j], out.p[j] * parts[i]);
    // Pick data for the polygon under the path (degenerate if the path is flat)
    out.pick_T = 0;
    for (Int x = 0; x <= m; ++x) out.pick_T += rat_floor(path.at(x)) + 1;
    Int sum_p = 0;
    for (const Int& pi : out.p) sum_p += pi;
    out.pick_B = m + sum_p + Int(n) + out.interior_b;
    return out;
}

}  // namespace staircase
