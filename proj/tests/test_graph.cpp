#include "doctest.h"
#include "test_helpers.hpp"

#include <sstream>

using namespace dcl;

TEST_CASE("make_edge orders endpoints") {
    CHECK(make_edge(3, 1) == Edge{1, 3});
    CHECK(make_edge(1, 3) == Edge{1, 3});
    CHECK_THROWS_AS(make_edge(2, 2), InputError);
}

TEST_CASE("graph construction normalizes and validates") {
    Graph g(4, {{4, 3}, {1, 2}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});
    CHECK(g == tst::g1_path4());

    CHECK_THROWS_AS(Graph(-1, {}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 4}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{0, 2}}), InputError);
    CHECK_THROWS_AS(Graph(3, {{1, 2}, {2, 1}}), InputError);
}

TEST_CASE("degrees and adjacency") {
    const Graph g = tst::example11_graph();
    CHECK(g.degree(5) == 4);
    CHECK(g.degree(8) == 1);
    CHECK(g.neighbors(6) == std::vector<int>{2, 3, 5, 7, 10});
    CHECK(g.has_edge(7, 10));
    CHECK(g.has_edge(10, 7));
    CHECK_FALSE(g.has_edge(1, 6));
    CHECK_FALSE(g.has_vertex(12));
    CHECK(g.has_vertex(11));
    CHECK_THROWS_AS(g.degree(0), InputError);
    CHECK_THROWS_AS(g.neighbors(12), InputError);
}

TEST_CASE("labeling basics") {
    const Labeling id = Labeling::identity(4);
    CHECK(id.size() == 4);
    CHECK(id(3) == 3);
    CHECK(id.vertices_by_label() == std::vector<int>{1, 2, 3, 4});

    Labeling f(std::vector<int>{0, 2, 4, 1, 3});
    CHECK(f(1) == 2);
    CHECK(f.vertices_by_label() == std::vector<int>{3, 1, 4, 2});

    CHECK_THROWS_AS(Labeling(std::vector<int>{0, 1, 1, 3}), InputError);
    CHECK_THROWS_AS(Labeling(std::vector<int>{0, 1, 5, 3}), InputError);
    CHECK_THROWS_AS(f(5), InputError);
}

TEST_CASE("apply_labeling renames vertices") {
    const Graph g = tst::g2_graph();
    Labeling f(std::vector<int>{0, 2, 4, 1, 3});
    const Graph h = apply_labeling(g, f);
    CHECK(h.order() == 4);
    CHECK(h.edges() == std::vector<Edge>{{1, 2}, {1, 4}, {3, 4}});
    CHECK(apply_labeling(g, Labeling::identity(4)) == g);
    CHECK_THROWS_AS(apply_labeling(g, Labeling::identity(3)), InputError);
}

TEST_CASE("remove_vertices produces induced subgraph with vertex maps") {
    const Graph g = tst::example11_graph();
    const InducedSubgraph sub = remove_vertices(g, {2, 3, 8, 9, 11, 1, 10});
    CHECK(sub.graph.order() == 4);
    CHECK(sub.to_original == std::vector<int>{0, 4, 5, 6, 7});
    CHECK(sub.to_new[4] == 1);
    CHECK(sub.to_new[2] == 0);
    CHECK(sub.graph.edges() == std::vector<Edge>{{1, 2}, {2, 3}, {3, 4}});

    const InducedSubgraph same = remove_vertices(g, {});
    CHECK(same.graph == g);
    CHECK(same.to_new[7] == 7);

    CHECK_THROWS_AS(remove_vertices(g, {12}), InputError);
}

TEST_CASE("remove_edges keeps all vertices") {
    const Graph t = tst::triangle();
    const Graph g = remove_edges(t, {{2, 3}});
    CHECK(g.order() == 3);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {1, 3}});
    CHECK(remove_edges(t, {}) == t);
    CHECK_THROWS_AS(remove_edges(t, {{1, 1}}), InputError);
    CHECK_THROWS_AS(remove_edges(tst::g1_path4(), {{1, 3}}), InputError);
}

TEST_CASE("components are sorted and ordered by smallest member") {
    const Graph g(7, {{5, 6}, {1, 3}, {2, 7}});
    const auto comps = components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == std::vector<int>{1, 3});
    CHECK(comps[1] == std::vector<int>{2, 7});
    CHECK(comps[2] == std::vector<int>{4});
    CHECK(comps[3] == std::vector<int>{5, 6});

    CHECK(components(tst::example11_graph()).size() == 1);
    CHECK(components(Graph(3, {})).size() == 3);
    CHECK(components(Graph(0, {})).empty());
}

TEST_CASE("path_decomposition walks each path component") {
    const Graph g(5, {{1, 2}, {2, 3}});
    const auto paths = path_decomposition(g);
    REQUIRE(paths.has_value());
    REQUIRE(paths->size() == 3);
    CHECK((*paths)[0] == std::vector<int>{1, 2, 3});
    CHECK((*paths)[1] == std::vector<int>{4});
    CHECK((*paths)[2] == std::vector<int>{5});

    // the walk starts at the endpoint with the smaller id
    const Graph zig(3, {{1, 3}, {2, 3}});
    const auto zp = path_decomposition(zig);
    REQUIRE(zp.has_value());
    CHECK((*zp)[0] == std::vector<int>{1, 3, 2});

    CHECK_FALSE(path_decomposition(tst::triangle()).has_value());
    CHECK_FALSE(path_decomposition(make_cycle(5)).has_value());
    CHECK_FALSE(path_decomposition(make_star(4)).has_value());
}

TEST_CASE("graph parsing accepts the plain edge-list format") {
    const Graph g = parse_graph("4 3\n1 2\n2 3\n3 4\n");
    CHECK(g == tst::g1_path4());

    CHECK(parse_graph("1 0\n").order() == 1);
    CHECK(parse_graph("3 0\n\n").size() == 0);
    CHECK(parse_graph("2 1\n\n 2 1 \n") == Graph(2, {{1, 2}}));
}

TEST_CASE("graph parsing reports the offending line") {
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("abc\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 2\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 2\n1 2\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 1\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 3\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n1 2 9\n"), InputError);
    CHECK_THROWS_AS(parse_graph("-2 0\n"), InputError);

    try {
        parse_graph("3 2\n1 2\n1 oops\n");
        FAIL("expected InputError");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("graph serialization round-trips") {
    for (const Graph& g : {tst::g1_path4(), tst::g2_graph(), tst::example11_graph(), Graph(6, {})}) {
        CHECK(parse_graph(serialize_graph(g)) == g);
    }
    CHECK(serialize_graph(tst::g1_path4()) == "4 3\n1 2\n2 3\n3 4\n");
}

TEST_CASE("labeling parsing and serialization round-trip") {
    const std::string text = "1 2\n2 4\n3 1\n4 3\n";
    const Labeling f = parse_labeling(text, 4);
    CHECK(f(2) == 4);
    CHECK(serialize_labeling(f) == text);
    CHECK(parse_labeling(serialize_labeling(f), 4) == f);

    CHECK_THROWS_AS(parse_labeling("1 1\n", 2), InputError);
    CHECK_THROWS_AS(parse_labeling("1 1\n2 1\n", 2), InputError);
    CHECK_THROWS_AS(parse_labeling("1 1\n1 2\n", 2), InputError);
    CHECK_THROWS_AS(parse_labeling("1 0\n2 1\n", 2), InputError);
    CHECK_THROWS_AS(parse_labeling("junk\n", 1), InputError);
}

TEST_CASE("dot export lists edges and optional label ranks") {
    const std::string plain = export_dot(tst::g2_graph(), std::nullopt);
    CHECK(plain.find("graph") != std::string::npos);
    CHECK(plain.find("1 -- 3") != std::string::npos);
    CHECK(plain.find("2 -- 4") != std::string::npos);
    CHECK(plain.find("label") == std::string::npos);

    const std::string labeled = export_dot(tst::example11_graph(), tst::example11_labeling());
    CHECK(labeled.find("label") != std::string::npos);
    CHECK(labeled.find("5 -- 6") != std::string::npos);
}
