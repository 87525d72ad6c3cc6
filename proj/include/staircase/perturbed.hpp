#pragma once

#include "staircase/rational.hpp"

#include <compare>
#include <string>

namespace staircase {

/*
 * A rational carrying a first-order symbolic infinitesimal: base + eps·ε with
 * ε > 0 and ε² ≡ 0.  Ordering is lexicographic, so base ± ε behaves like an
 * irrational infinitesimally close to base.
 */
struct Perturbed {
    Rat base;
    Rat eps;

    Perturbed() = default;
    Perturbed(Rat b) : base(std::move(b)) {}
    Perturbed(Rat b, Rat e) : base(std::move(b)), eps(std::move(e)) {}

    bool is_rational() const { return eps == 0; }

    friend Perturbed operator+(const Perturbed& x, const Perturbed& y) {
        return {x.base + y.base, x.eps + y.eps};
    }
    friend Perturbed operator-(const Perturbed& x, const Perturbed& y) {
        return {x.base - y.base, x.eps - y.eps};
    }
    Perturbed operator-() const { return {-base, -eps}; }
    // (a + cε)(a' + c'ε) = aa' + (ac' + a'c)ε, discarding ε².
    friend Perturbed operator*(const Perturbed& x, const Perturbed& y) {
        return {x.base * y.base, x.base * y.eps + y.base * x.eps};
    }
    friend Perturbed operator*(const Rat& c, const Perturbed& x) {
        return {c * x.base, c * x.eps};
    }
    friend Perturbed operator*(const Perturbed& x, const Rat& c) { return c * x; }

    friend bool operator==(const Perturbed& x, const Perturbed& y) {
        return x.base == y.base && x.eps == y.eps;
    }
    friend std::strong_ordering operator<=>(const Perturbed& x, const Perturbed& y) {
        if (int c = cmp(x.base, y.base); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        int c = cmp(x.eps, y.eps);
        if (c == 0) return std::strong_ordering::equal;
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
};

inline Int perturbed_floor(const Perturbed& x) {
    if (!is_integer(x.base)) return rat_floor(x.base);
    Int b(x.base.get_num());
    return x.eps < 0 ? Int(b - 1) : b;
}

inline Int perturbed_ceil(const Perturbed& x) { return -perturbed_floor(-x); }

// 1/(b + eε) = 1/b − (e/b²)ε to first order.
inline Perturbed perturbed_recip(const Perturbed& x) {
    if (x.base == 0) throw std::domain_error("perturbed_recip: zero base");
    Rat inv = 1 / x.base;
    return {inv, -x.eps * inv * inv};
}

inline Perturbed perturbed_frac(const Perturbed& x) {
    return x - Perturbed(Rat(perturbed_floor(x)));
}

// Literal syntax: "p/q", "p/q+eps", "p/q-eps".
inline Perturbed parse_perturbed(const std::string& s) {
    if (s.size() >= 4 && s.substr(s.size() - 4) == "+eps")
        return {parse_rat(s.substr(0, s.size() - 4)), Rat(1)};
    if (s.size() >= 4 && s.substr(s.size() - 4) == "-eps")
        return {parse_rat(s.substr(0, s.size() - 4)), Rat(-1)};
    return {parse_rat(s)};
}

inline std::string to_string(const Perturbed& x) {
    std::string out = to_string(x.base);
    if (x.eps > 0) out += x.eps == 1 ? "+eps" : "+" + to_string(x.eps) + "*eps";
    if (x.eps < 0) out += x.eps == -1 ? "-eps" : to_string(x.eps) + "*eps";
    return out;
}

}  // namespace staircase
