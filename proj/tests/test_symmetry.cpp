#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plap/cheeger.hpp"
#include "plap/errors.hpp"
#include "plap/graph.hpp"
#include "plap/spectral.hpp"
#include "plap/symmetry.hpp"

#include <algorithm>
#include <set>
#include <vector>

using namespace plap;

namespace {

DirichletDomain path_domain() {
    WeightedGraph g;
    g.add_vertex("v0", 1);
    g.add_vertex("v1", 2);
    g.add_vertex("v2", 2);
    g.add_vertex("v3", 2);
    g.add_vertex("v4", 1);
    g.add_edge("v0", "v1", 1);
    g.add_edge("v1", "v2", 1);
    g.add_edge("v2", "v3", 1);
    g.add_edge("v3", "v4", 1);
    return build_domain(g, {"v1", "v2", "v3"});
}

/// Star with 8 rays, 2 of them boundary; the 6 interior rays are
/// interchangeable.
DirichletDomain star_domain() {
    WeightedGraph g;
    g.add_vertex("c", 8);
    for (int i = 1; i <= 8; ++i) g.add_vertex("x" + std::to_string(i), 1);
    for (int i = 1; i <= 8; ++i) g.add_edge("c", "x" + std::to_string(i), 1);
    std::vector<std::string> omega{"c"};
    for (int i = 1; i <= 6; ++i) omega.push_back("x" + std::to_string(i));
    return build_domain(g, omega);
}

} // namespace

TEST_CASE("path reflection group") {
    DirichletDomain d = path_domain();
    AutomorphismGroup grp = enumerate_automorphisms(d);
    CHECK(grp.size() == 2);
    std::set<std::vector<std::size_t>> elems(grp.elements.begin(), grp.elements.end());
    CHECK(elems.count({0, 1, 2}) == 1);
    CHECK(elems.count({2, 1, 0}) == 1);

    VertexPartition parts = orbits(grp, d.size());
    REQUIRE(parts.cells.size() == 2);
    CHECK(parts.cells[0] == std::vector<std::size_t>{0, 2});
    CHECK(parts.cells[1] == std::vector<std::size_t>{1});
}

TEST_CASE("star group is the full symmetric group on interchangeable rays") {
    DirichletDomain d = star_domain();
    AutomorphismGroup grp = enumerate_automorphisms(d);
    CHECK(grp.size() == 720);

    // group axioms: closure under composition, inverses, identity
    std::set<std::vector<std::size_t>> elems(grp.elements.begin(), grp.elements.end());
    std::vector<std::size_t> identity{0, 1, 2, 3, 4, 5, 6};
    CHECK(elems.count(identity) == 1);
    int checked = 0;
    for (std::size_t a = 0; a < grp.size(); a += 37) {
        for (std::size_t b = 1; b < grp.size(); b += 41) {
            std::vector<std::size_t> comp(d.size());
            for (std::size_t i = 0; i < d.size(); ++i)
                comp[i] = grp.elements[a][grp.elements[b][i]];
            CHECK(elems.count(comp) == 1);
            ++checked;
        }
    }
    CHECK(checked > 200);
    for (std::size_t a = 0; a < grp.size(); a += 97) {
        std::vector<std::size_t> inv(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) inv[grp.elements[a][i]] = i;
        CHECK(elems.count(inv) == 1);
    }

    VertexPartition parts = orbits(grp, d.size());
    REQUIRE(parts.cells.size() == 2);
    CHECK(parts.cells[0] == std::vector<std::size_t>{0});
    CHECK(parts.cells[1] == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("enumeration cap") {
    DirichletDomain d = star_domain();
    CHECK_THROWS_AS(enumerate_automorphisms(d, 3), TooLarge);
}

TEST_CASE("equitable validation flags bad partitions") {
    DirichletDomain d = path_domain();
    VertexPartition good;
    good.cells = {{0, 2}, {1}};
    CHECK(validate_equitable(d, good).equitable);

    VertexPartition bad;
    bad.cells = {{0, 1}, {2}};  // v1 and v2 differ in boundary weight
    EquitableReport rep = validate_equitable(d, bad);
    CHECK_FALSE(rep.equitable);
    CHECK_FALSE(rep.violations.empty());
}

TEST_CASE("quotient collapses cells and adds weights") {
    DirichletDomain d = path_domain();
    VertexPartition parts;
    parts.cells = {{0, 2}, {1}};
    DirichletDomain q = quotient(d, parts);
    REQUIRE(q.size() == 2);
    CHECK(q.ids == std::vector<std::string>{"[v1]", "[v2]"});
    CHECK(q.nu == std::vector<Rat>{4, 2});
    CHECK(q.boundary == std::vector<Rat>{2, 0});
    REQUIRE(q.edges.size() == 1);
    CHECK(q.edges[0].mu == 2);

    VertexPartition bad;
    bad.cells = {{0, 1}, {2}};
    CHECK_THROWS_AS(quotient(d, bad), NotEquitable);
    VertexPartition notAPartition;
    notAPartition.cells = {{0}, {1}};
    CHECK_THROWS_AS(quotient(d, notAPartition), InvalidPartition);
}

TEST_CASE("lift is constant on cells") {
    VertexPartition parts;
    parts.cells = {{0, 2}, {1}};
    auto up = lift(parts, 3, {5.0, 7.0});
    CHECK(up == std::vector<double>{5.0, 7.0, 5.0});
    CHECK_THROWS_AS(lift(parts, 3, std::vector<double>{1.0}), DimensionMismatch);
}

TEST_CASE("spectrum and Cheeger data survive the quotient") {
    DirichletDomain d = path_domain();
    VertexPartition parts;
    parts.cells = {{0, 2}, {1}};
    InvarianceReport rep = verify_quotient_invariance(d, parts, {1.5, 2, 4});
    CHECK(rep.allAgree);
    CHECK(rep.hEqual);
    CHECK(rep.hOriginal == Rat(1, 3));
    CHECK(rep.cutIsCellUnion);
    for (const auto& row : rep.rows) {
        CHECK(row.agree);
        CHECK(row.lambdaOriginal == doctest::Approx(row.lambdaQuotient).epsilon(1e-7));
    }

    // the p = 2 check again through the dense oracle on both sides
    DirichletDomain q = quotient(d, parts);
    CHECK(p2_dense_spectrum(d).lambdas.front() ==
          doctest::Approx(p2_dense_spectrum(q).lambdas.front()).epsilon(1e-12));
}
