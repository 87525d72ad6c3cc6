#pragma once

#include "staircase/contfrac.hpp"
#include "staircase/rational.hpp"

#include <vector>

namespace staircase {

/*
 * Integer weight expansion of p/q > 0 in lowest terms:
 *   X_{-1} = p, X_0 = q, X_{i+1} = X_{i-1} - a_i X_i with 0 <= X_{i+1} < X_i,
 * listing each X_i with multiplicity a_i.  The run-lengths are the continued
 * fraction quotients of p/q, the last value is 1, ΣW_i = p+q-1, ΣW_i² = pq.
 */
struct WeightSequence {
    Rat target;                              // p/q
    std::vector<Int> W;                      // normalized weights, non-increasing
    std::vector<std::pair<Int, Int>> blocks; // (value, run-length)

    std::vector<Rat> unnormalized() const {  // w_i = W_i / q
        std::vector<Rat> w;
        w.reserve(W.size());
        for (const Int& x : W) w.push_back(make_rat(x, target.get_den()));
        return w;
    }
};

inline WeightSequence weight_sequence(const Rat& r) {
    if (r <= 0) throw std::domain_error("weight_sequence: argument must be positive");
    WeightSequence ws;
    ws.target = r;
    Int prev = r.get_num(), cur = r.get_den();
    while (cur != 0) {
        Int quot, rem;
        mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), prev.get_mpz_t(), cur.get_mpz_t());
        ws.blocks.emplace_back(cur, quot);
        for (Int i = 0; i < quot; ++i) ws.W.push_back(cur);
        prev = cur;
        cur = rem;
    }
    return ws;
}

inline Int dot(const std::vector<Int>& x, const std::vector<Int>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

inline Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("dot: length mismatch");
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

}  // namespace staircase
