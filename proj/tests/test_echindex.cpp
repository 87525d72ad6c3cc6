#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "staircase/echindex.hpp"
#include "staircase/sequences.hpp"
#include "staircase/verify.hpp"

#include <random>
#include <vector>

using namespace staircase;

namespace {

Perturbed theta1() { return {Rat(55, 8), Rat(1)}; }

}  // namespace

TEST_CASE("Fredholm index in the compactified complement") {
    CurveData c;
    c.level = Level::cobordism_X;
    c.x = theta1();

    c.d = 21;
    c.k = 1;
    c.ends_b1 = {55};
    CHECK(fredholm_index_X(c) == 0);  // 2(-1 + 63 - (55 + 7))

    c.d = 3;
    c.ends_b1 = {1};
    c.ends_b2 = {1};
    CHECK(fredholm_index_X(c) == 0);  // 2(-1 + 9 - 1 - 7)

    c.ends_b1 = {};
    c.ends_b2 = {1};
    CHECK(fredholm_index_X(c) == 2);  // 2(-1 + 9 - 7)

    CurveData wrong = c;
    wrong.level = Level::blowup_E;
    CHECK_THROWS_AS(fredholm_index_X(wrong), std::invalid_argument);
}

TEST_CASE("ECH index in the compactified complement") {
    Perturbed b0{Rat(8), Rat(1)};
    CHECK(ech_index_X(3, {8, 0, Rat(1), b0}) == 2);   // 18 - 16
    CHECK(ech_index_X(3, {0, 1, Rat(1), b0}) == 0);   // 18 - 18
    CHECK(ech_index_X(3, {1, 1, Rat(1), b0}) == -4);  // 18 - 22
}

TEST_CASE("index ladder along the staircase, n = 1..15") {
    GhostSequences s(16);
    for (int n = 1; n <= 15; ++n) {
        Perturbed x{s.b(n), Rat(1)};
        Int d = 3 * s.ell(n);
        CurveData c;
        c.level = Level::cobordism_X;
        c.x = x;
        c.d = d;
        c.k = 1;
        c.ends_b1 = {s.P(n)};
        CAPTURE(n);
        CHECK(fredholm_index_X(c) == 0);
        CHECK(ech_index_X(d, {s.ell(n), s.ell(n), Rat(1), x}) == -2);
        CHECK(ech_index_X(d, {0, s.Q(n), Rat(1), x}) == 0);
    }
}

TEST_CASE("blowup-level indices of the model curve at n = 1") {
    GhostSequences s(1);
    CurveData c;
    c.level = Level::blowup_E;
    c.x = theta1();
    c.z = model_class(1).z;
    c.ends_b1 = {s.ell(0)};  // 1
    c.ends_b2 = {s.t(1)};    // 6
    CHECK(fredholm_index_E(c) == 0);
    OrbitSet top{1, 6, Rat(1), theta1()};
    CHECK(ech_index_E(c, top) == 0);
    CHECK(index_residual(c, top) == 0);
}

TEST_CASE("blowup-level index with no constraints") {
    CurveData c;
    c.level = Level::blowup_E;
    c.x = theta1();
    c.z = std::vector<Int>(14, 0);
    c.ends_b1 = {1};
    CHECK(fredholm_index_E(c) == 2);  // 2(-1 + 1 + (1 + 0))
    OrbitSet set{1, 0, Rat(1), theta1()};
    CHECK(ech_index_E(c, set) == 2);  // gr = 2, no constraint cost
}

TEST_CASE("actions") {
    CHECK(action_X(3, Rat(17, 6), 8, 0, {Rat(8), Rat(1)}) == Perturbed(Rat(1, 2)));
    // model curve at n = 1: 1 + 6x - z.w = 1/8 + 6 eps
    std::vector<Rat> w = weight_sequence(Rat(55, 8)).unnormalized();
    Perturbed a = action_E(1, 6, theta1(), model_class(1).z, w);
    CHECK(a.base == Rat(1, 8));
    CHECK(a.eps == Rat(6));
    OrbitSet top{1, 6, Rat(1), theta1()}, bottom{0, 0, Rat(1), theta1()};
    CHECK(action_symp(top, bottom) == top.action());
}

TEST_CASE("writhe bounds") {
    // single negative end of multiplicity 8 at angle 1/(8+eps)
    Perturbed angle = perturbed_recip({Rat(8), Rat(1)});
    CHECK(writhe_bound(angle, {8}, false) == 7);
    // positive ends: the bound equals 2*(area under the path) minus the heights
    std::mt19937 rng(7301);
    std::uniform_int_distribution<int> dp(1, 30), dq(1, 9), ds(0, 1), dm(1, 60);
    for (int trial = 0; trial < 100; ++trial) {
        Perturbed theta{make_rat(dp(rng), dq(rng)), Rat(ds(rng) ? 1 : -1)};
        std::vector<Int> parts = partition_pos(theta, dm(rng)).parts;
        PartitionArea pa = area_from_partition(theta, parts);
        Int sum_p = 0;
        for (const Int& pi : pa.p) sum_p += pi;
        CAPTURE(to_string(theta));
        CHECK(writhe_bound(theta, parts, true) == pa.twice_area_maxsum - sum_p);
    }
}

TEST_CASE("diff vector identities, exact, on random data") {
    std::mt19937 rng(7302);
    std::uniform_int_distribution<int> len(1, 12), num(-20, 20), den(1, 6);
    for (int trial = 0; trial < 1000; ++trial) {
        int k = len(rng);
        std::vector<Rat> z, w;
        Rat ww(0);
        for (int i = 0; i < k; ++i) {
            z.push_back(make_rat(num(rng), den(rng)));
            w.push_back(make_rat(num(rng), den(rng)));
            ww += w.back() * w.back();
        }
        if (ww == 0) continue;
        DiffVector d = diff_vector(z, w);
        CHECK(dot(d.w, d.diff) == 0);
        CHECK(dot(z, z) == d.lambda * d.lambda * dot(w, w) + d.diff_dot_diff());
    }
    CHECK_THROWS_AS(diff_vector({Rat(1)}, {Rat(0)}), std::domain_error);
}

TEST_CASE("stabilized top-level index anchor") {
    StabilizedEndData e;
    e.k = 1;
    e.d = 21;
    e.r = {55};
    e.x = theta1();
    e.S = Rat(166);
    CHECK(stabilized_index(e, StabKind::top_level) == 0);  // 126 - 110 - 15 - 1
}

TEST_CASE("large-S threshold 3xd^2") {
    StabilizedEndData e;
    e.d = 1;
    e.x = theta1();  // 3xd^2 = 165/8 + 3 eps
    e.S = Rat(21);
    CHECK(large_S_ok(e));
    e.S = Rat(20);
    CHECK_FALSE(large_S_ok(e));
}

TEST_CASE("symplectization and neck component indices") {
    StabilizedEndData e;
    e.k = 1;
    e.x = theta1();
    e.r = {55};
    CHECK(stabilized_index(e, StabKind::symplectization_no_neg) == 2 * 63);
    StabilizedEndData neck;
    neck.x = theta1();
    neck.r = {55};
    neck.p = 55;
    CHECK(stabilized_index(neck, StabKind::neck_component) == 0);
}

TEST_CASE("covering index defect anchor") {
    // double cover with ends (4) over (2) on beta_1, k = 2, at theta_1
    CHECK(cover_index_defect({4}, {}, 2, {2}, {}, 2, theta1()) == 1);
    CHECK_THROWS_AS(cover_index_defect({3}, {}, 2, {2}, {}, 2, theta1()),
                    std::invalid_argument);
}

TEST_CASE("neck double point lower bound") {
    CHECK(neck_double_points({1, 7}) == 1);
    CHECK(neck_double_points({8}) == 0);
    CHECK(neck_double_points({2, 6}) == 2);
    CHECK(neck_double_points({1, 1, 1}) == 3);
    CHECK_THROWS_AS(neck_double_points({7, 1}), std::invalid_argument);
}
