#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace staircase {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: lowest terms, positive denominator

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p/q" or "p"; whitespace is not accepted.
inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::domain_error("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// Σ_{i=0}^{n-1} floor((a*i + b) / m), the classical Euclidean-descent floor sum.
// Needed where multiplicities are too large for a direct loop.
inline Int floor_sum(Int n, Int m, Int a, Int b) {
    if (n <= 0) return 0;
    if (m <= 0) throw std::domain_error("floor_sum: modulus must be positive");
    Int ans = 0;
    while (true) {
        if (a >= m || a < 0) {
            Int qa;
            mpz_fdiv_q(qa.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
            ans += n * (n - 1) / 2 * qa;
            a -= qa * m;
        }
        if (b >= m || b < 0) {
            Int qb;
            mpz_fdiv_q(qb.get_mpz_t(), b.get_mpz_t(), m.get_mpz_t());
            ans += n * qb;
            b -= qb * m;
        }
        Int y_max = a * n + b;
        if (y_max < m) break;
        n = y_max / m;
        b = y_max % m;
        std::swap(m, a);
    }
    return ans;
}

}  // namespace staircase
