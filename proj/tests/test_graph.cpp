#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plap/errors.hpp"
#include "plap/graph.hpp"
#include "plap/json_io.hpp"
#include "plap/radical.hpp"
#include "plap/rational.hpp"

#include <set>
#include <string>
#include <vector>

using namespace plap;

namespace {

WeightedGraph five_path() {
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
    return g;
}

WeightedGraph nested_cut_graph() {
    WeightedGraph g;
    g.add_vertex("v1", 1);
    g.add_vertex("v2", 2);
    g.add_vertex("v3", 3);
    g.add_vertex("v4", 5);
    g.add_vertex("v5", 5);
    for (const char* w : {"w1", "w2", "w3"}) g.add_vertex(w, 2);
    g.add_edge("v1", "v2", 1);
    g.add_edge("v2", "v3", 1);
    g.add_edge("v3", "v4", 1);
    g.add_edge("v3", "v5", 1);
    g.add_edge("v4", "v5", 1);
    for (const char* w : {"w1", "w2", "w3"}) {
        g.add_edge(w, "v4", 1);
        g.add_edge(w, "v5", 1);
    }
    return g;
}

} // namespace

TEST_CASE("rational parsing and printing round-trip") {
    for (const char* s : {"3/4", "-2", "7", "22/7", "-5/3", "0"}) {
        Rat r = parse_rational(s);
        CHECK(rat_to_string(r) == s);
        CHECK(parse_rational(rat_to_string(r)) == r);
    }
    CHECK(parse_rational("6/4") == Rat(3, 2));
    CHECK(rat_to_string(Rat(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("ipow") {
    CHECK(ipow(BigInt(2), 10) == 1024);
    CHECK(ipow(BigInt(3), 0) == 1);
    CHECK(ipow(BigInt(-2), 3) == -8);
    CHECK(ipow(BigInt(10), 20) == BigInt("100000000000000000000"));
}

TEST_CASE("QuadVal equality sees through non-squarefree radicands") {
    QuadVal a(Rat(1), BigInt(8));      // sqrt(8)
    QuadVal b(Rat(2), BigInt(2));      // 2 sqrt(2)
    CHECK(a == b);
    CHECK(a.squared() == Rat(8));
    CHECK(q_less(QuadVal(Rat(1), BigInt(2)), QuadVal(Rat(3, 2))));   // sqrt2 < 1.5
    CHECK(q_less(QuadVal(Rat(7, 5)), QuadVal(Rat(1), BigInt(2))));   // 1.4 < sqrt2
    CHECK(QuadVal(Rat(0), BigInt(5)).is_rational());
    CHECK(QuadVal(Rat(3)).as_rational() == Rat(3));
    CHECK(q_scale(a, Rat(1, 2)) == QuadVal(Rat(1), BigInt(2)));
}

TEST_CASE("RadicalSum canonicalization, sign, and order") {
    RadicalSum s = rs_add(RadicalSum(QuadVal(Rat(1), BigInt(2))),
                          RadicalSum(QuadVal(Rat(1), BigInt(8))));
    REQUIRE(s.terms.size() == 1);            // sqrt2 + sqrt8 = 3 sqrt2
    CHECK(s.terms[0] == QuadVal(Rat(3), BigInt(2)));

    RadicalSum diff = rs_sub(s, RadicalSum(QuadVal(Rat(3), BigInt(2))));
    CHECK(diff.is_zero());
    CHECK(rs_sign(diff) == 0);

    // sqrt2 + sqrt3 vs sqrt10: 3.146 vs 3.162
    RadicalSum left = rs_add(RadicalSum(QuadVal(Rat(1), BigInt(2))),
                             RadicalSum(QuadVal(Rat(1), BigInt(3))));
    CHECK(rs_less(left, RadicalSum(QuadVal(Rat(1), BigInt(10)))));
    CHECK(rs_sign(rs_sub(left, RadicalSum(QuadVal(Rat(1), BigInt(10))))) == -1);

    CHECK(RadicalSum(Rat(5, 3)).is_rational());
    CHECK(RadicalSum(Rat(5, 3)).as_rational() == Rat(5, 3));
    CHECK_FALSE(left.is_rational());
}

TEST_CASE("graph construction and weighted degree") {
    WeightedGraph g = five_path();
    CHECK(g.size() == 5);
    CHECK(g.index_of("v2") == 2);
    CHECK(g.id_of(4) == "v4");
    CHECK(g.nu(1) == 2);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(2) == 2);
    CHECK(g.adjacency(2).size() == 2);
    CHECK_THROWS_AS(g.index_of("zz"), std::invalid_argument);

    WeightedGraph h;
    h.add_vertex("a", 1);
    CHECK_THROWS_AS(h.add_vertex("a", 1), std::invalid_argument);
    CHECK_THROWS_AS(h.add_vertex("b", 0), std::invalid_argument);
    h.add_vertex("b", 1);
    CHECK_THROWS_AS(h.add_edge("a", "zz", 1), UnknownVertex);
    CHECK_THROWS_AS(h.add_edge("a", "a", 1), std::invalid_argument);
    CHECK_THROWS_AS(h.add_edge("a", "b", 0), std::invalid_argument);
}

TEST_CASE("build_domain separates interior from boundary weight") {
    WeightedGraph g = five_path();
    DirichletDomain d = build_domain(g, {"v1", "v2", "v3"});
    REQUIRE(d.size() == 3);
    CHECK(d.ids == std::vector<std::string>{"v1", "v2", "v3"});
    CHECK(d.nu == std::vector<Rat>{2, 2, 2});
    CHECK(d.boundary == std::vector<Rat>{1, 0, 1});
    CHECK(d.edges.size() == 2);
    CHECK(d.has_boundary());

    DirichletDomain whole = build_domain(g, g.ids());
    CHECK_FALSE(whole.has_boundary());

    CHECK_THROWS_AS(build_domain(g, {"v1", "zz"}), UnknownVertex);
    CHECK_THROWS_AS(build_domain(g, {}), EmptyDomain);
    CHECK_THROWS_AS(build_domain(g, {"v1", "v3"}), DisconnectedDomain);
}

TEST_CASE("edge_boundary and volume are exact") {
    WeightedGraph g = nested_cut_graph();
    DirichletDomain d = build_domain(g, {"v1", "v2", "v3", "v4", "v5"});
    // {v1, v2}: one interior edge leaves, no boundary weight inside
    CHECK(edge_boundary(d, {0, 1}) == 1);
    CHECK(volume(d, {0, 1}) == 3);
    // {v1, v2, v3}: two interior edges leave
    CHECK(edge_boundary(d, {0, 1, 2}) == 2);
    CHECK(volume(d, {0, 1, 2}) == 6);
    // whole interior: only the w-coupling remains
    CHECK(edge_boundary(d, {0, 1, 2, 3, 4}) == 6);
    CHECK(volume(d, {0, 1, 2, 3, 4}) == 16);
}

TEST_CASE("bipartition and its failure on odd cycles") {
    WeightedGraph g = five_path();
    DirichletDomain d = build_domain(g, {"v1", "v2", "v3"});
    Bipartition parts = bipartition(d);
    CHECK(parts.partOne == std::vector<std::size_t>{0, 2});
    CHECK(parts.partTwo == std::vector<std::size_t>{1});

    WeightedGraph tri;
    tri.add_vertex("a", 1);
    tri.add_vertex("b", 1);
    tri.add_vertex("c", 1);
    tri.add_edge("a", "b", 1);
    tri.add_edge("b", "c", 1);
    tri.add_edge("c", "a", 1);
    DirichletDomain dt = build_domain(tri, tri.ids());
    CHECK_THROWS_AS(bipartition(dt), NotBipartite);
}

TEST_CASE("metric balls in the path metric") {
    WeightedGraph g = five_path();
    auto [ball1, sphere1] = metric_balls(g, "v2", 1);
    CHECK(ball1 == std::vector<std::size_t>{1, 2, 3});
    CHECK(sphere1 == std::vector<std::size_t>{1, 3});
    auto [ball0, sphere0] = metric_balls(g, "v2", 0);
    CHECK(ball0 == std::vector<std::size_t>{2});
    CHECK(sphere0 == std::vector<std::size_t>{2});
    auto [ballAll, sphere2] = metric_balls(g, "v2", 2);
    CHECK(ballAll.size() == 5);
    CHECK(sphere2 == std::vector<std::size_t>{0, 4});
}

TEST_CASE("rational JSON tokens") {
    CHECK(rat_to_json(Rat(3)) == Json(3));
    CHECK(rat_to_json(Rat(1, 3)) == Json("1/3"));
    CHECK(rat_from_json(Json(5)) == Rat(5));
    CHECK(rat_from_json(Json("7/2")) == Rat(7, 2));
    CHECK_THROWS_AS(rat_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("graph JSON round-trip preserves ids, weights, and edges") {
    WeightedGraph g = nested_cut_graph();
    Json j = graph_to_json(g);
    WeightedGraph back = graph_from_json(j);
    REQUIRE(back.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(back.id_of(i) == g.id_of(i));
        CHECK(back.nu(i) == g.nu(i));
    }
    REQUIRE(back.edges().size() == g.edges().size());
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
        CHECK(back.edges()[e].u == g.edges()[e].u);
        CHECK(back.edges()[e].v == g.edges()[e].v);
        CHECK(back.edges()[e].mu == g.edges()[e].mu);
    }
    CHECK(graph_to_json(back) == j);

    CHECK_THROWS_AS(graph_from_json(Json::array()), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(Json{{"vertices", 3}}), std::invalid_argument);
}

TEST_CASE("omega defaults to every vertex") {
    WeightedGraph g = five_path();
    Json j = graph_to_json(g);
    CHECK(omega_from_json(j, g) == g.ids());
    j["omega"] = Json::array({"v1", "v2"});
    CHECK(omega_from_json(j, g) == std::vector<std::string>{"v1", "v2"});
    j["omega"] = "v1";
    CHECK_THROWS_AS(omega_from_json(j, g), std::invalid_argument);
}

TEST_CASE("partition cells JSON round-trip") {
    std::vector<std::vector<std::string>> cells{{"v1", "v3"}, {"v2"}};
    CHECK(cells_from_json(cells_to_json(cells)) == cells);
    CHECK_THROWS_AS(cells_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("model spec JSON round-trip and validation") {
    ModelSpec spec;
    spec.family = Family::AntiTree;
    spec.order = 2;
    spec.scheme = Scheme::ModifiedPhysical;
    Json j = model_spec_to_json(spec, 150);
    auto [back, horizon] = model_spec_from_json(j);
    CHECK(back.family == Family::AntiTree);
    CHECK(back.order == 2);
    CHECK(back.scheme == Scheme::ModifiedPhysical);
    CHECK(horizon == 150);
    CHECK(model_spec_to_json(back, horizon) == j);

    ModelSpec tree;
    tree.family = Family::Tree;
    tree.branching = {1, 2, 3};
    tree.scheme = Scheme::Normalized;
    auto [tback, th] = model_spec_from_json(model_spec_to_json(tree, 200));
    CHECK(tback.branching == std::vector<long long>{1, 2, 3});
    CHECK(th == 200);

    CHECK_THROWS_AS(model_spec_from_json(Json{{"family", "forest"}}), InvalidSpec);
    CHECK_THROWS_AS(model_spec_from_json(Json{{"family", "tree"}}), InvalidSpec);
    CHECK_THROWS_AS(
        model_spec_from_json(Json{{"family", "antitree"}, {"order", 0}, {"scheme", "physical"}}),
        InvalidSpec);
    CHECK_THROWS_AS(
        model_spec_from_json(Json{{"family", "antitree"}, {"order", 1}, {"scheme", "odd"}}),
        InvalidSpec);
}
