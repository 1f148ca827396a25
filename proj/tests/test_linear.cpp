#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plap/errors.hpp"
#include "plap/limits.hpp"
#include "plap/linear.hpp"
#include "plap/radical.hpp"

#include <cmath>
#include <vector>

using namespace plap;

namespace {

ModelSpec antitree(int a, Scheme s) {
    ModelSpec spec;
    spec.family = Family::AntiTree;
    spec.order = a;
    spec.scheme = s;
    return spec;
}

ModelSpec tree(std::vector<long long> m, Scheme s) {
    ModelSpec spec;
    spec.family = Family::Tree;
    spec.branching = std::move(m);
    spec.scheme = s;
    return spec;
}

} // namespace

TEST_CASE("direct sequence construction checks its inputs") {
    std::vector<Rat> nu{1, 1, 1, 1};
    std::vector<QuadVal> mu{QuadVal(Rat(1)), QuadVal(Rat(5)), QuadVal(Rat(5)),
                            QuadVal(Rat(5))};
    LinearGraph L(nu, mu);
    CHECK(L.horizon == 3);
    CHECK(L.exactRational);
    CHECK(L.ballVol == std::vector<Rat>{1, 2, 3, 4});

    CHECK_THROWS_AS(LinearGraph({}, {}), InvalidSpec);
    CHECK_THROWS_AS(LinearGraph({Rat(1)}, {QuadVal(Rat(1)), QuadVal(Rat(1))}), InvalidSpec);
    CHECK_THROWS_AS(LinearGraph({Rat(0), Rat(1)}, {QuadVal(Rat(1)), QuadVal(Rat(1))}),
                    InvalidSpec);
}

TEST_CASE("anti-tree weights under the three schemes") {
    LinearGraph phys = build_linear(antitree(2, Scheme::Physical), 10);
    // nu_r = (r+1)^2, mu_r = (r+1)^2 (r+2)^2
    CHECK(phys.nu[0] == 1);
    CHECK(phys.nu[3] == 16);
    CHECK(phys.mu[0] == QuadVal(Rat(4)));
    CHECK(phys.mu[2] == QuadVal(Rat(9 * 16)));
    CHECK(phys.exactRational);
    CHECK(ball_ratio(phys, 0) == QuadVal(Rat(4)));  // 2^a at the root

    LinearGraph norm = build_linear(antitree(2, Scheme::Normalized), 10);
    // nu_r = (r+1)^a Deg(r): Deg(0) = 2^a, Deg(r) = r^a + (r+2)^a
    CHECK(norm.nu[0] == 4);
    CHECK(norm.nu[1] == 4 * (1 + 9));
    CHECK(norm.mu == phys.mu);

    LinearGraph mod = build_linear(antitree(2, Scheme::ModifiedPhysical), 10);
    CHECK_FALSE(mod.exactRational);
    CHECK(mod.nu[0] == 1);  // nu stays physical
    // mu'_0 = mu_0 / sqrt(D_0) with D_0 = max(Deg(0), Deg(1)) = 10: its square
    // is rational
    CHECK(mod.mu[0].squared() == Rat(8, 5));
    CHECK(mod.mu[0] == QuadVal(Rat(2, 5), BigInt(10)));
}

TEST_CASE("order-1 anti-tree has every physical ball ratio equal to 2") {
    LinearGraph L = build_linear(antitree(1, Scheme::Physical), 50);
    for (int r = 0; r <= 50; ++r) {
        QuadVal f = ball_ratio(L, r);
        CHECK(f.is_rational());
        CHECK(f.as_rational() == 2);
    }
    CHECK_THROWS_AS(ball_ratio(L, 51), std::out_of_range);
    CHECK_THROWS_AS(ball_ratio(L, -1), std::out_of_range);
}

TEST_CASE("tree weights under the three schemes") {
    LinearGraph phys = build_linear(tree({2}, Scheme::Physical), 10);
    // P_r = 2^{r+1}: nu_r = P_{r-1}, mu_r = P_r
    CHECK(phys.nu[0] == 1);
    CHECK(phys.nu[3] == 8);
    CHECK(phys.mu[3] == QuadVal(Rat(16)));

    LinearGraph norm = build_linear(tree({2}, Scheme::Normalized), 10);
    CHECK(norm.nu[0] == 2);            // root measure is its degree m_0
    CHECK(norm.nu[2] == 4 + 8);        // P_1 + P_2
    CHECK(norm.mu[2] == QuadVal(Rat(8)));

    // branching list: last entry repeats
    LinearGraph seq = build_linear(tree({1, 2, 3}, Scheme::Physical), 6);
    CHECK(seq.mu[0] == QuadVal(Rat(1)));
    CHECK(seq.mu[1] == QuadVal(Rat(2)));
    CHECK(seq.mu[2] == QuadVal(Rat(6)));
    CHECK(seq.mu[3] == QuadVal(Rat(18)));
    CHECK(seq.mu[4] == QuadVal(Rat(54)));
}

TEST_CASE("ball and annulus enumeration on a hand-checked sequence graph") {
    std::vector<Rat> nu{1, 1, 1, 1};
    std::vector<QuadVal> mu{QuadVal(Rat(1)), QuadVal(Rat(5)), QuadVal(Rat(5)),
                            QuadVal(Rat(5))};
    LinearGraph L(nu, mu);

    LinearCheeger withRoot = cheeger_linear(L, true);
    CHECK(withRoot.finiteMin == RadicalSum(Rat(1)));  // the root ball alone
    CHECK(withRoot.argmin == 0);
    CHECK(withRoot.argminK == -1);
    CHECK(withRoot.h == 1.0);

    LinearCheeger rootless = cheeger_linear(L, false);
    // interval {1..3}: boundary mu_0 + mu_3 = 6 over volume 3
    CHECK(rootless.finiteMin == RadicalSum(Rat(2)));
    CHECK(rootless.argminK == 0);
    CHECK(rootless.argmin == 3);
}

TEST_CASE("limit detection stages") {
    auto constant = [](int) { return RadicalSum(Rat(5, 3)); };
    LimitEstimate c = estimate_limit(constant, 0, 60);
    CHECK(c.status == LimitStatus::Converged);
    REQUIRE(c.exactValue.has_value());
    CHECK(*c.exactValue == RadicalSum(Rat(5, 3)));

    auto decaying = [](int r) { return RadicalSum(Rat(1, r + 1)); };
    LimitEstimate d = estimate_limit(decaying, 0, 200);
    CHECK(d.status == LimitStatus::Converged);
    CHECK(*d.value == 0.0);  // snapped

    auto growing = [](int r) { return RadicalSum(Rat(r + 1)); };
    LimitEstimate g = estimate_limit(growing, 0, 200);
    CHECK(g.status == LimitStatus::DivergesToInfinity);

    auto flapping = [](int r) { return RadicalSum(Rat(r % 2 ? 3 : 1)); };
    LimitEstimate f = estimate_limit(flapping, 0, 200);
    CHECK(f.status == LimitStatus::Inconclusive);
}

TEST_CASE("anti-tree constants through the pipeline at horizon 200") {
    // order 1: every finite constant, plus the non-attained modified infimum
    SchemeConstants p1 = model_constants(antitree(1, Scheme::Physical), 200);
    CHECK(p1.ball.h == 2.0);
    CHECK(p1.ball.finiteMin == RadicalSum(Rat(2)));
    CHECK(p1.atInfinity.status == LimitStatus::Converged);
    CHECK(*p1.atInfinity.value == doctest::Approx(2.0).epsilon(1e-9));

    SchemeConstants m1 = model_constants(antitree(1, Scheme::ModifiedPhysical), 200);
    CHECK(m1.ball.h == 0.0);  // ratios decrease to 0, no minimizing ball
    CHECK(m1.ball.tail.status == LimitStatus::Converged);
    CHECK(m1.atInfinity.status == LimitStatus::Converged);
    CHECK(*m1.atInfinity.value == 0.0);

    SchemeConstants n1 = model_constants(antitree(1, Scheme::Normalized), 200);
    CHECK(n1.ball.h == 0.0);
    CHECK(n1.atInfinity.status == LimitStatus::Converged);
    CHECK(*n1.atInfinity.value == 0.0);

    // order 2: attained modified minimum 4/sqrt(10), infinite physical volume
    SchemeConstants p2 = model_constants(antitree(2, Scheme::Physical), 200);
    CHECK(p2.ball.h == 4.0);
    CHECK(p2.atInfinity.status == LimitStatus::DivergesToInfinity);

    SchemeConstants m2 = model_constants(antitree(2, Scheme::ModifiedPhysical), 200);
    CHECK(m2.ball.finiteMin == RadicalSum(QuadVal(Rat(2, 5), BigInt(10))));
    CHECK(m2.ball.argmin == 0);
    CHECK(*m2.atInfinity.value == doctest::Approx(3 / std::sqrt(2.0)).epsilon(1e-9));

    // order 3: both escape routes diverge
    SchemeConstants p3 = model_constants(antitree(3, Scheme::Physical), 200);
    CHECK(p3.ball.h == 8.0);
    CHECK(p3.atInfinity.status == LimitStatus::DivergesToInfinity);
    SchemeConstants m3 = model_constants(antitree(3, Scheme::ModifiedPhysical), 200);
    CHECK(m3.atInfinity.status == LimitStatus::DivergesToInfinity);
}

TEST_CASE("closed-form reference rows") {
    AntitreeRow r1 = antitree_reference_row(1);
    CHECK(r1.h.value == QuadVal(Rat(2)));
    CHECK(r1.hInf.value == QuadVal(Rat(2)));
    CHECK(r1.hM.value == QuadVal(Rat(1)));  // 2 / sqrt(1 + 3)
    CHECK_FALSE(r1.h.infinite);

    AntitreeRow r2 = antitree_reference_row(2);
    CHECK(r2.h.value == QuadVal(Rat(4)));
    CHECK(r2.hInf.infinite);
    CHECK(r2.hM.value == QuadVal(Rat(2, 5), BigInt(10)));  // 4 / sqrt(10)
    CHECK(r2.hInfM.value == QuadVal(Rat(3, 2), BigInt(2)));  // 3 / sqrt 2
    CHECK(r2.hN.value == QuadVal(Rat(0)));
    CHECK(r2.hInfN.value == QuadVal(Rat(0)));

    AntitreeRow r3 = antitree_reference_row(3);
    CHECK(r3.h.value == QuadVal(Rat(8)));
    CHECK(r3.hInf.infinite);
    CHECK(r3.hInfM.infinite);
}

TEST_CASE("tree constants with the closed-form cross-check") {
    TreeCheeger t2 = tree_cheeger({2}, Scheme::Physical, 200);
    CHECK(t2.closedFormAgrees);
    CHECK(t2.h == 1.0);
    CHECK(t2.atInfinity.status == LimitStatus::Converged);
    REQUIRE(t2.atInfinity.exactValue.has_value());
    CHECK(*t2.atInfinity.exactValue == RadicalSum(Rat(1)));

    TreeCheeger t2m = tree_cheeger({2}, Scheme::ModifiedPhysical, 200);
    CHECK(t2m.closedFormAgrees);
    CHECK(t2m.h == doctest::Approx(0.577350269189626).epsilon(1e-12));

    TreeCheeger t2n = tree_cheeger({2}, Scheme::Normalized, 200);
    CHECK(t2n.closedFormAgrees);
    CHECK(t2n.h == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(*t2n.atInfinity.exactValue == RadicalSum(Rat(1, 3)));

    TreeCheeger t3n = tree_cheeger({3}, Scheme::Normalized, 200);
    REQUIRE(t3n.atInfinity.exactValue.has_value());
    CHECK(*t3n.atInfinity.exactValue == RadicalSum(Rat(1, 2)));
}

TEST_CASE("rapidly growing branching drives the normalized constant to 1") {
    std::vector<long long> rapid;
    for (long long i = 1; i <= 41; ++i) rapid.push_back(i);
    LimitEstimate closed;
    LimitEstimate est = rapidly_branching_check(rapid, 40, &closed);
    CHECK(est.status == LimitStatus::Converged);
    CHECK(std::abs(*est.value - 1.0) < 1e-3);
    // the exact partial-product route is honest about its slower window
    CHECK(closed.status == LimitStatus::Inconclusive);

    LimitEstimate constThree = rapidly_branching_check({3}, 40);
    CHECK(constThree.status == LimitStatus::Converged);
    REQUIRE(constThree.exactValue.has_value());
    CHECK(*constThree.exactValue == RadicalSum(Rat(1, 2)));
}

TEST_CASE("the quotient of the materialized model matches the sequence graph") {
    SphereConsistency anti = sphere_partition_consistency(antitree(1, Scheme::Physical), 3);
    CHECK(anti.consistent);
    CHECK(anti.vertexCount == 15);
    CHECK(anti.mismatches.empty());

    SphereConsistency t = sphere_partition_consistency(tree({2}, Scheme::Normalized), 3);
    CHECK(t.consistent);
    CHECK(t.vertexCount == 31);

    SphereConsistency ray = sphere_partition_consistency(tree({1}, Scheme::Physical), 4);
    CHECK(ray.consistent);
    CHECK(ray.vertexCount == 6);
}
