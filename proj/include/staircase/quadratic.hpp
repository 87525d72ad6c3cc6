#pragma once

#include "staircase/rational.hpp"

#include <compare>
#include <string>

namespace staircase {

/*
 * Exact element a + b√5 of ℚ[√5].  Comparisons are decided by sign analysis
 * of a² − 5b², never by approximation.
 */
struct Quad {
    Rat a;  // rational part
    Rat b;  // coefficient of √5

    Quad() = default;
    Quad(Rat ra) : a(std::move(ra)) {}
    Quad(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}

    friend Quad operator+(const Quad& x, const Quad& y) { return {x.a + y.a, x.b + y.b}; }
    friend Quad operator-(const Quad& x, const Quad& y) { return {x.a - y.a, x.b - y.b}; }
    Quad operator-() const { return {-a, -b}; }
    friend Quad operator*(const Quad& x, const Quad& y) {
        return {x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    Quad recip() const {
        Rat norm = a * a - 5 * b * b;
        if (norm == 0) throw std::domain_error("Quad: reciprocal of zero");
        return {a / norm, -b / norm};
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.recip(); }

    // sign of a + b√5
    int sign() const {
        int sa = sgn(a), sb = sgn(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // mixed signs: compare a² with 5b²
        int c = cmp(a * a, 5 * b * b);
        return c == 0 ? 0 : (c > 0 ? sa : sb);
    }

    friend bool operator==(const Quad& x, const Quad& y) { return x.a == y.a && x.b == y.b; }
    friend std::strong_ordering operator<=>(const Quad& x, const Quad& y) {
        int s = (x - y).sign();
        if (s == 0) return std::strong_ordering::equal;
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

  private:
    static int sgn(const Rat& r) { return sgn_int(cmp(r, 0)); }
    static int sgn_int(int c) { return (c > 0) - (c < 0); }
};

inline int quad_cmp(const Quad& x, const Quad& y) { return (x - y).sign(); }

// τ⁴ = (7 + 3√5)/2 for τ the golden mean.
inline Quad tau4() { return {Rat(7, 2), Rat(3, 2)}; }
// σ = (3 − √5)/6
inline Quad sigma_const() { return {Rat(1, 2), Rat(-1, 6)}; }
// 5/τ⁴ = (35 − 15√5)/2
inline Quad five_over_tau4() { return Quad(Rat(5)) / tau4(); }
inline Quad eight_sigma_over_tau4() { return Quad(Rat(8)) * sigma_const() / tau4(); }

inline std::string to_string(const Quad& q) {
    return to_string(q.a) + (q.b >= 0 ? "+" : "") + to_string(q.b) + "*s5";
}

// Literal syntax: "a+b*s5" / "a-b*s5" / "a" with a, b rationals.
inline Quad parse_quad(const std::string& s) {
    auto star = s.find("*s5");
    if (star == std::string::npos) return {parse_rat(s)};
    // split at the sign that starts the √5 coefficient
    for (size_t i = star; i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/') {
            Rat a = parse_rat(s.substr(0, i));
            Rat b = parse_rat(s[i] == '+' ? s.substr(i + 1, star - i - 1)
                                          : s.substr(i, star - i));
            return {a, b};
        }
    }
    throw std::invalid_argument("bad quadratic literal: " + s);
}

}  // namespace staircase
