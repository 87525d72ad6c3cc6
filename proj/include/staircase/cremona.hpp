#pragma once

#include "staircase/rational.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace staircase {

/*
 * Blowup class (d; m₁,…,m_k).  Cremona moves preserve c₁ = 3d − Σm_i and the
 * self-intersection d² − Σm_i².
 */
struct BlowupClass {
    Int d;
    std::vector<Int> m;

    Int c1() const {
        Int s = 0;
        for (const Int& mi : m) s += mi;
        return 3 * d - s;
    }
    Int self_intersection() const {
        Int s = 0;
        for (const Int& mi : m) s += mi * mi;
        return d * d - s;
    }
    BlowupClass dropped_zeros() const {
        BlowupClass out{d, {}};
        for (const Int& mi : m)
            if (mi != 0) out.m.push_back(mi);
        return out;
    }
    friend bool operator==(const BlowupClass& a, const BlowupClass& b) {
        return a.d == b.d && a.m == b.m;
    }
};

// (d; m) ↦ (2d − m_i − m_j − m_k; …, d − m_j − m_k, …) on three distinct indices.
inline BlowupClass cremona_move(const BlowupClass& v, size_t i, size_t j, size_t k) {
    if (i == j || j == k || i == k) throw std::invalid_argument("cremona_move: index collision");
    BlowupClass out = v;
    while (out.m.size() <= std::max({i, j, k})) out.m.push_back(0);
    Int mi = out.m[i], mj = out.m[j], mk = out.m[k];
    out.d = 2 * v.d - mi - mj - mk;
    out.m[i] = v.d - mj - mk;
    out.m[j] = v.d - mi - mk;
    out.m[k] = v.d - mi - mj;
    return out;
}

struct CremonaStep {
    BlowupClass before, after;  // both sorted descending
};

struct CremonaLog {
    BlowupClass reduced;
    std::vector<CremonaStep> steps;
    bool terminated;  // false if the move budget ran out
};

/*
 * Greedy reduction: sort multiplicities descending (stable, so ties keep their
 * position order), apply the move to the three largest while the defect
 * d − (m₁+m₂+m₃) is negative, drop zeros.  Halts on negative multiplicities.
 */
inline CremonaLog cremona_reduce(BlowupClass v, long budget = 1000000) {
    CremonaLog log;
    auto sort_desc = [](BlowupClass& c) {
        std::stable_sort(c.m.begin(), c.m.end(), [](const Int& a, const Int& b) { return a > b; });
    };
    v = v.dropped_zeros();
    sort_desc(v);
    log.terminated = true;
    while (true) {
        if (v.m.size() < 3) break;
        bool negative = std::any_of(v.m.begin(), v.m.end(), [](const Int& x) { return x < 0; });
        if (negative) break;  // non-effective input; report as-is
        Int defect = v.d - (v.m[0] + v.m[1] + v.m[2]);
        if (defect >= 0) break;
        if (static_cast<long>(log.steps.size()) >= budget) {
            log.terminated = false;
            break;
        }
        BlowupClass next = cremona_move(v, 0, 1, 2).dropped_zeros();
        sort_desc(next);
        log.steps.push_back({v, next});
        v = next;
    }
    log.reduced = v;
    return log;
}

inline std::string to_string(const BlowupClass& v) {
    std::string s = "(" + to_string(v.d) + ";";
    for (size_t i = 0; i < v.m.size(); ++i) s += (i ? "," : "") + to_string(v.m[i]);
    return s + ")";
}

// Parses "d;m1,m2,..." (spaces not accepted).
inline BlowupClass parse_blowup(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw std::invalid_argument("blowup class needs 'd;m1,m2,...'");
    BlowupClass v;
    v.d = Int(s.substr(0, semi));
    size_t pos = semi + 1;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        v.m.push_back(Int(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return v;
}

}  // namespace staircase
