#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "staircase/lattice.hpp"
#include "staircase/paths.hpp"
#include "staircase/sequences.hpp"

#include <random>
#include <vector>

using namespace staircase;

TEST_CASE("floor_multiples_sum matches the direct loop") {
    std::mt19937 rng(7201);
    std::uniform_int_distribution<int> dp(1, 40), dq(1, 10), ds(-1, 1), dM(0, 200);
    for (int trial = 0; trial < 300; ++trial) {
        Perturbed theta{make_rat(dp(rng), dq(rng)), Rat(ds(rng))};
        Int M = dM(rng);
        Int direct = 0;
        for (Int j = 1; j <= M; ++j) direct += perturbed_floor(Rat(j) * theta);
        CAPTURE(to_string(theta));
        CAPTURE(M.get_str());
        CHECK(floor_multiples_sum(theta, M) == direct);
    }
}

TEST_CASE("grading anchors on the staircase ellipsoids") {
    // E(1, 8 + eps)
    Perturbed b0{Rat(8), Rat(1)};
    CHECK(orbit_grading({8, 0, Rat(1), b0}) == 16);
    CHECK(orbit_grading({0, 1, Rat(1), b0}) == 18);
    CHECK(orbit_grading({1, 1, Rat(1), b0}) == 22);
    // E(1, 55/8 + eps)
    Perturbed b1{Rat(55, 8), Rat(1)};
    CHECK(orbit_grading({55, 0, Rat(1), b1}) == 502);
    CHECK(orbit_grading({0, 8, Rat(1), b1}) == 504);
    CHECK(orbit_grading({7, 7, Rat(1), b1}) == 506);
    CHECK(orbit_grading({1, 1, Rat(1), b1}) == 18);
    CHECK(orbit_grading({0, 0, Rat(1), b1}) == 0);
}

TEST_CASE("grading ladder (Q+1)(P+1) -/+ 2 around the three distinguished sets") {
    GhostSequences s(4);
    for (int n = 1; n <= 3; ++n) {
        Perturbed b{s.b(n), Rat(1)};
        Int X = (s.Q(n) + 1) * (s.P(n) + 1);
        CHECK(orbit_grading({s.P(n), 0, Rat(1), b}) == X - 2);
        CHECK(orbit_grading({0, s.Q(n), Rat(1), b}) == X);
        CHECK(orbit_grading({s.ell(n), s.ell(n), Rat(1), b}) == X + 2);
    }
}

TEST_CASE("grading formula equals the lattice-count oracle on random sets") {
    std::mt19937 rng(7202);
    std::uniform_int_distribution<int> dp(1, 12), dq(1, 12), ds(0, 1), dm(0, 30);
    for (int trial = 0; trial < 200; ++trial) {
        int p = dp(rng), q = dq(rng);
        OrbitSet set{dm(rng), dm(rng), Rat(1), Perturbed{make_rat(p, q), Rat(ds(rng) ? 1 : -1)}};
        if (set.m1 == 0 && set.m2 == 0) continue;
        CAPTURE(set.m1.get_str());
        CAPTURE(set.m2.get_str());
        CAPTURE(to_string(set.b));
        CHECK(orbit_grading(set) == orbit_grading_lattice(set));
    }
}

TEST_CASE("capacity sequence of the round ball") {
    std::vector<CapEntry> caps = cap_sequence(Rat(1), Perturbed(Rat(1)), 9);
    std::vector<int> expect{0, 1, 1, 2, 2, 2, 3, 3, 3, 3};
    REQUIRE(caps.size() == 10);
    for (size_t k = 0; k < expect.size(); ++k) {
        CHECK(caps[k].value == Perturbed(Rat(expect[k])));
        CHECK(caps[k].l + caps[k].m == expect[k]);
    }
}

TEST_CASE("capacity sequence of E(1, 55/8 + eps)") {
    Perturbed b{Rat(55, 8), Rat(1)};
    std::vector<CapEntry> caps = cap_sequence(Rat(1), b, 8);
    REQUIRE(caps.size() == 9);
    for (int k = 0; k <= 6; ++k) {
        CHECK(caps[k].value == Perturbed(Rat(k)));
        CHECK(caps[k].l == k);
        CHECK(caps[k].m == 0);
    }
    CHECK(caps[7].value == b);  // 55/8 + eps slips below 7
    CHECK(caps[7].l == 0);
    CHECK(caps[7].m == 1);
    CHECK(caps[8].value == Perturbed(Rat(7)));
}

TEST_CASE("positive partition anchors at theta_1 = 55/8 + eps") {
    Perturbed theta{Rat(55, 8), Rat(1)};
    CHECK(partition_pos(theta, 5).parts == std::vector<Int>{5});
    CHECK(partition_pos(theta, 13).parts == std::vector<Int>{8, 5});
    Perturbed theta_tilde = perturbed_recip(theta);  // 8/55 - eps'
    CHECK(partition_pos(theta_tilde, 4).parts == std::vector<Int>{1, 1, 1, 1});
}

TEST_CASE("negative partition anchor") {
    Perturbed theta{Rat(55, 8), Rat(1)};
    EndPartition ep = partition_neg(theta, 8);
    CHECK(ep.parts == std::vector<Int>(8, 1));
    CHECK(ep.path.height() == 56);  // ceil(8 * (55/8 + eps))
}

TEST_CASE("hull and recursive positive partitions agree up to m = 300") {
    std::vector<Perturbed> thetas{
        parse_perturbed("55/8+eps"), parse_perturbed("377/55+eps"),
        perturbed_recip(parse_perturbed("55/8+eps")), parse_perturbed("17/6-eps"),
        parse_perturbed("5/3+eps")};
    for (const Perturbed& theta : thetas) {
        for (Int m = 1; m <= 300; ++m) {
            EndPartition a = partition_pos(theta, m);
            EndPartition b = partition_pos_recursive(theta, m);
            CAPTURE(to_string(theta));
            CAPTURE(m.get_str());
            REQUIRE(a.parts == b.parts);
            CHECK(a.path.twice_area_under() == b.path.twice_area_under());
        }
    }
}

TEST_CASE("pairwise floor additivity across positive partition parts") {
    std::mt19937 rng(7203);
    std::uniform_int_distribution<int> dp(1, 30), dq(1, 9), ds(0, 1), dm(1, 150);
    for (int trial = 0; trial < 150; ++trial) {
        Perturbed theta{make_rat(dp(rng), dq(rng)), Rat(ds(rng) ? 1 : -1)};
        std::vector<Int> parts = partition_pos(theta, dm(rng)).parts;
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                CAPTURE(to_string(theta));
                CHECK(perturbed_floor(Rat(parts[i] + parts[j]) * theta) ==
                      perturbed_floor(Rat(parts[i]) * theta) +
                          perturbed_floor(Rat(parts[j]) * theta));
            }
    }
}

TEST_CASE("kappa and area anchors") {
    GhostSequences s(2);
    Perturbed theta1{s.b(1), Rat(1)};
    CHECK(kappa(theta1, 6).base == Rat(3, 2));
    Perturbed theta2_tilde = perturbed_recip(Perturbed{s.b(2), Rat(1)});
    CHECK(kappa(theta2_tilde, s.ell(1)).base == Rat(56, 377));
    // closed forms on E(1, 55/8): 2A(theta, m) = m(8-m)/8, 2A(recip, m) = 8m^2/55
    for (Int m = 1; m <= 7; ++m)
        CHECK(twice_area_A(theta1, m).base == make_rat(m * (8 - m), 8));
    Perturbed theta1_tilde = perturbed_recip(theta1);
    for (Int m = 1; m <= 6; ++m)
        CHECK(twice_area_A(theta1_tilde, m).base == make_rat(8 * m * m, 55));
}

TEST_CASE("area of the maximal partition vanishes; coarser partitions pay") {
    Perturbed theta{Rat(55, 8), Rat(1)};
    PartitionArea max8 = area_from_partition(theta, {8});
    CHECK(max8.area_C == 0);
    // splitting 8 as (7,1) leaves lattice points above the path
    PartitionArea split = area_from_partition(theta, {7, 1});
    CHECK(split.area_C > 0);
    CHECK_THROWS_AS(area_from_partition(theta, {1, 7}), std::invalid_argument);  // wrong order
}

TEST_CASE("Pick's theorem on partition regions: 2*area = 2T - B - 2") {
    std::mt19937 rng(7204);
    std::uniform_int_distribution<int> dp(1, 30), dq(1, 9), ds(0, 1), dm(1, 80);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Perturbed theta{make_rat(dp(rng), dq(rng)), Rat(ds(rng) ? 1 : -1)};
        EndPartition ep = partition_pos(theta, dm(rng));
        PartitionArea pa = area_from_partition(theta, ep.parts);
        CHECK(pa.area_C == 0);
        Int h = 0;
        for (const Int& pi : pa.p) h += pi;
        if (h == 0) continue;  // degenerate region, Pick does not apply
        ++checked;
        CAPTURE(to_string(theta));
        CHECK(ep.path.twice_area_under() == 2 * pa.pick_T - pa.pick_B - 2);
        CHECK(ep.path.twice_area_under() == pa.twice_area_maxsum);
    }
    CHECK(checked > 100);
}
