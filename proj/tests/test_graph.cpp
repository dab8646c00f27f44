#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "confhom/graph.hpp"
#include "corpus_builders.hpp"

using namespace confhom;
namespace corpus = confhom_corpus;

TEST_CASE("parsing and serialization") {
    SUBCASE("round trip") {
        for (const auto& [name, g] : corpus::all()) {
            CAPTURE(name);
            Graph back = parse_graph(serialize_graph(g));
            CHECK(serialize_graph(back) == serialize_graph(g));
        }
    }
    SUBCASE("comments and blanks") {
        Graph g = parse_graph("# heading\n\nv a\nv b # trailing\n\ne x a b\n");
        CHECK(g.vertices().size() == 2);
        CHECK(g.edges().size() == 1);
    }
    SUBCASE("errors carry line numbers") {
        auto expect = [](const std::string& text, const std::string& fragment) {
            try {
                parse_graph(text);
                FAIL_CHECK("expected InputError for: " << text);
            } catch (const InputError& e) {
                std::string msg = e.what();
                CAPTURE(msg);
                CHECK(msg.find(fragment) != std::string::npos);
            }
        };
        expect("v a\nw b\n", "line 2");
        expect("v a\nv a\n", "duplicate vertex");
        expect("v a\ne x a b\n", "undeclared vertex");
        expect("v a\nv b\ne x a\n", "line 3");
        expect("v a\nv b\ne x a b\ne x a b\n", "duplicate edge");
    }
}

TEST_CASE("half-edge ids") {
    CHECK(half_id("e", 0) == "e.0");
    auto [e, s] = split_half("e.a0.1");
    CHECK(e == "e.a0");
    CHECK(s == 1);
    CHECK_THROWS_AS(split_half("e"), InputError);
    CHECK_THROWS_AS(split_half("e.2"), InputError);

    Graph g = corpus::loop_multi();
    auto at_u = g.half_edges_at("u");
    REQUIRE(at_u.size() == 4);
    CHECK(at_u[0] == "l.0");
    CHECK(at_u[1] == "l.1");
    CHECK(at_u[2] == "p1.0");
    CHECK(at_u[3] == "p2.0");
    CHECK(g.degree("u") == 4);
    CHECK(g.degree("w") == 2);
}

TEST_CASE("subdivision") {
    Graph c3 = corpus::cycle3();
    SUBCASE("identity") {
        GraphWithTrace s = subdivide(c3, 1);
        CHECK(serialize_graph(s.graph) == serialize_graph(c3));
        CHECK(s.trace.edge_map.at("e1") == std::vector<std::string>{"e1"});
    }
    SUBCASE("three pieces") {
        GraphWithTrace s = subdivide(c3, 3);
        CHECK(s.graph.vertices().size() == 3 + 3 * 2);
        CHECK(s.graph.edges().size() == 9);
        CHECK(s.trace.edge_map.at("e1") ==
              std::vector<std::string>({"e1.1", "e1.2", "e1.3"}));
        CHECK(s.trace.half_edge_map.at("e1.0") == "e1.1.0");
        CHECK(s.trace.half_edge_map.at("e1.1") == "e1.3.1");
        CHECK(s.graph.edge("e1.1").end[0] == "a");
        CHECK(s.graph.edge("e1.3").end[1] == "b");
        auto [b0, b1] = betti_and_components(s.graph);
        CHECK(b0 == 1);
        CHECK(b1 == 1);
    }
    SUBCASE("loops subdivide cleanly") {
        GraphWithTrace s = subdivide(corpus::loop_multi(), 2);
        CHECK(s.graph.edge("l.1").end[0] == "u");
        CHECK(s.graph.edge("l.2").end[1] == "u");
        CHECK(s.graph.edge("l.1").end[1] == "l.c1");
        auto [b0, b1] = betti_and_components(s.graph);
        CHECK(b0 == 1);
        CHECK(b1 == 2);
    }
    CHECK_THROWS_AS(subdivide(c3, 0), InputError);
}

TEST_CASE("contraction") {
    Graph p = corpus::path3();
    SUBCASE("single edge") {
        GraphWithTrace c = contract_edge(p, "e2");
        CHECK(!c.graph.has_vertex("c"));
        CHECK(c.graph.has_vertex("b"));
        CHECK(c.graph.edge("e3").end[0] == "b");
        CHECK(c.trace.vertex_map.at("c") == "b");
        CHECK(c.trace.edge_map.at("e2").empty());
        CHECK(c.trace.half_edge_map.at("e2.0").empty());
        CHECK(c.trace.half_edge_map.at("e3.0") == "e3.0");
    }
    SUBCASE("parallel edges become loops") {
        GraphWithTrace c = contract_edge(corpus::theta(), "p1");
        CHECK(c.graph.vertices().size() == 1);
        CHECK(c.graph.edge("p2").is_loop());
        CHECK(c.graph.edge("p3").is_loop());
    }
    SUBCASE("loops refuse to contract") {
        CHECK_THROWS_AS(contract_edge(corpus::loop_multi(), "l"), InputError);
    }
    SUBCASE("tree contraction is order independent") {
        GraphWithTrace ab = contract_edge(contract_edge(p, "e1").graph, "e2");
        GraphWithTrace ba = contract_edge(contract_edge(p, "e2").graph, "e1");
        CHECK(serialize_graph(ab.graph) == serialize_graph(ba.graph));
        GraphWithTrace both = contract_edges(p, {"e2", "e1"});
        CHECK(serialize_graph(both.graph) == serialize_graph(ab.graph));
        CHECK(both.trace.vertex_map.at("c") == "a");
        CHECK(both.trace.vertex_map.at("b") == "a");
        CHECK(both.trace.vertex_map.at("d") == "d");
    }
}

TEST_CASE("deletion normalization") {
    SUBCASE("plain half") {
        Graph y = corpus::ygraph();
        NormalizedDeletion nd = normalize_for_deletion(y, "c", {"g1.0"});
        REQUIRE(nd.halves.size() == 1);
        CHECK(nd.halves[0] == "g1.a0.0");
        CHECK(nd.graph.has_vertex("g1.m0"));
        CHECK(nd.graph.edge("g1.a0").end[0] == "c");
        CHECK(nd.graph.edge("g1.a0").end[1] == "g1.m0");
        CHECK(nd.graph.edge("g1.r0").end[0] == "g1.m0");
        CHECK(nd.graph.edge("g1.r0").end[1] == "l1");
        CHECK(nd.graph.degree("g1.m0") == 2);
        CHECK(nd.trace.edge_map.at("g1") == std::vector<std::string>({"g1.a0", "g1.r0"}));
        // untouched edges pass through
        CHECK(nd.trace.edge_map.at("g2") == std::vector<std::string>{"g2"});
    }
    SUBCASE("side 1 half keeps v at side 0 of the near piece") {
        Graph y = corpus::ygraph();
        // g1 runs c -> l1, so the half at l1 is g1.1.
        NormalizedDeletion nd = normalize_for_deletion(y, "l1", {"g1.1"});
        CHECK(nd.halves[0] == "g1.a1.0");
        CHECK(nd.graph.edge("g1.a1").end[0] == "l1");
        CHECK(nd.graph.edge("g1.a1").end[1] == "g1.m1");
        CHECK(nd.graph.edge("g1.r1").end[0] == "c");
        CHECK(nd.graph.edge("g1.r1").end[1] == "g1.m1");
        CHECK(nd.trace.edge_map.at("g1") == std::vector<std::string>({"g1.r1", "g1.a1"}));
        CHECK(nd.trace.half_edge_map.at("g1.0") == "g1.r1.0");
    }
    SUBCASE("loops get two midpoints") {
        Graph lm = corpus::loop_multi();
        for (const auto& halves :
             std::vector<std::vector<std::string>>{{"l.0"}, {"l.1"}, {"l.0", "l.1"}}) {
            NormalizedDeletion nd = normalize_for_deletion(lm, "u", halves);
            CHECK(nd.graph.has_vertex("l.m0"));
            CHECK(nd.graph.has_vertex("l.m1"));
            CHECK(nd.graph.edge("l.c").end[0] == "l.m0");
            CHECK(nd.graph.edge("l.c").end[1] == "l.m1");
            CHECK(nd.graph.edge("l.a0").end[0] == "u");
            CHECK(nd.graph.edge("l.a1").end[0] == "u");
            auto [b0, b1] = betti_and_components(nd.graph);
            CHECK(b0 == 1);
            CHECK(b1 == 2);
        }
        NormalizedDeletion nd = normalize_for_deletion(lm, "u", {"l.1", "l.0"});
        CHECK(nd.halves == std::vector<std::string>({"l.a1.0", "l.a0.0"}));
    }
    SUBCASE("errors") {
        Graph y = corpus::ygraph();
        CHECK_THROWS_AS(normalize_for_deletion(y, "c", {}), InputError);
        CHECK_THROWS_AS(normalize_for_deletion(y, "c", {"g1.1"}), InputError);
        CHECK_THROWS_AS(normalize_for_deletion(y, "c", {"g1.0", "g1.0"}), InputError);
        CHECK_THROWS_AS(normalize_for_deletion(y, "zz", {"g1.0"}), InputError);
    }
}

TEST_CASE("edge and vertex deletion") {
    Graph t = corpus::theta();
    Graph d = delete_edges(t, {"p2"});
    CHECK(d.vertices().size() == 2);
    CHECK(d.edges().size() == 2);
    CHECK_THROWS_AS(delete_edges(t, {"zz"}), InputError);

    Graph dv = delete_vertex(corpus::ygraph(), "c");
    CHECK(dv.vertices().size() == 3);
    CHECK(dv.edges().empty());
}

TEST_CASE("betti numbers") {
    auto bb = [](const Graph& g) { return betti_and_components(g); };
    CHECK(bb(corpus::path3()) == std::make_pair(1, 0));
    CHECK(bb(corpus::cycle3()) == std::make_pair(1, 1));
    CHECK(bb(corpus::cycle5()) == std::make_pair(1, 1));
    CHECK(bb(corpus::ygraph()) == std::make_pair(1, 0));
    CHECK(bb(corpus::hgraph()) == std::make_pair(1, 0));
    CHECK(bb(corpus::theta()) == std::make_pair(1, 2));
    CHECK(bb(corpus::k4()) == std::make_pair(1, 3));
    CHECK(bb(corpus::k4_minus()) == std::make_pair(1, 2));
    CHECK(bb(corpus::two_cycles()) == std::make_pair(2, 2));
    CHECK(bb(corpus::loop_multi()) == std::make_pair(1, 2));
}

TEST_CASE("automorphisms") {
    CHECK(vertex_automorphisms(corpus::cycle3()).size() == 6);
    CHECK(vertex_automorphisms(corpus::k4()).size() == 24);
    CHECK(vertex_automorphisms(corpus::path3()).size() == 2);
    CHECK(vertex_automorphisms(corpus::ygraph()).size() == 6);
    CHECK(vertex_automorphisms(corpus::theta()).size() == 2);
    CHECK(vertex_automorphisms(corpus::loop_multi()).size() == 1);
    CHECK(vertex_automorphisms(corpus::two_cycles()).size() == 72);
    // A 9 vertex graph is out of scope for the brute force search.
    Graph big;
    for (int i = 0; i < 9; ++i) big.add_vertex("v" + std::to_string(i));
    CHECK_THROWS_AS(vertex_automorphisms(big), InputError);
}

TEST_CASE("tree contraction") {
    Graph p = corpus::path3();
    CHECK(serialize_graph(contract_tree(p, {"e2"}).graph) ==
          serialize_graph(contract_edge(p, "e2").graph));

    GraphWithTrace star = contract_tree(corpus::ygraph(), {"g1", "g2", "g3"});
    CHECK(star.graph.vertices() == std::vector<std::string>{"c"});
    CHECK(star.graph.edges().empty());

    GraphWithTrace k = contract_tree(corpus::k4(), {"ab", "ac", "ad"});
    CHECK(k.graph.vertices().size() == 1);
    CHECK(k.graph.edges().size() == 3);
    for (const auto& e : k.graph.edges()) CHECK(e.is_loop());
    CHECK(betti_and_components(k.graph) == std::make_pair(1, 3));

    SUBCASE("independent of the listed order") {
        std::vector<std::string> t{"ab", "ac", "ad"};
        std::string want = serialize_graph(k.graph);
        do {
            CHECK(serialize_graph(contract_tree(corpus::k4(), t).graph) == want);
        } while (std::next_permutation(t.begin(), t.end()));
    }

    SUBCASE("rejects non-trees") {
        CHECK_THROWS_AS(contract_tree(corpus::cycle3(), {"e1", "e2", "e3"}), InputError);
        CHECK_THROWS_AS(contract_tree(p, {"e1", "e3"}), InputError);
        CHECK_THROWS_AS(contract_tree(corpus::loop_multi(), {"l"}), InputError);
        CHECK_THROWS_AS(contract_tree(p, {}), InputError);
        CHECK_THROWS_AS(contract_tree(p, {"e1", "e1"}), InputError);
    }
}

TEST_CASE("all-halves normalization") {
    NormalizedDeletion nd = normalize_for_deletion(corpus::ygraph(), "c");
    CHECK(nd.graph.vertices().size() == 4 + 3);
    CHECK(nd.graph.edges().size() == 3 + 3);
    CHECK(nd.halves == std::vector<std::string>{"g1.a0.0", "g2.a0.0", "g3.a0.0"});

    NormalizedDeletion lm = normalize_for_deletion(corpus::loop_multi(), "u");
    CHECK(lm.graph.vertices().size() == 2 + 4);
    CHECK(lm.graph.edges().size() == 3 + 2 + 2);
    CHECK(lm.halves ==
          std::vector<std::string>{"l.a0.0", "l.a1.0", "p1.a0.0", "p2.a0.0"});

    Graph lone;
    lone.add_vertex("x");
    NormalizedDeletion z = normalize_for_deletion(lone, "x");
    CHECK(serialize_graph(z.graph) == serialize_graph(lone));
    CHECK(z.halves.empty());
}

TEST_CASE("deletion models") {
    NormalizedDeletion nd = normalize_for_deletion(corpus::ygraph(), "c");

    GraphWithTrace one = delete_half_edges_model(nd.graph, "c", {nd.halves[0]});
    CHECK(one.graph.vertices().size() == nd.graph.vertices().size());
    CHECK(one.graph.edges().size() == nd.graph.edges().size() - 1);
    CHECK(betti_and_components(one.graph) == std::make_pair(2, 0));
    CHECK(one.trace.edge_map.at("g1.a0").empty());
    CHECK(one.trace.half_edge_map.at("g1.a0.0").empty());

    GraphWithTrace all = delete_half_edges_model(nd.graph, "c", nd.halves);
    CHECK(all.graph.degree("c") == 0);
    CHECK(betti_and_components(all.graph) == std::make_pair(4, 0));

    GraphWithTrace xv = delete_vertex_model(nd.graph, "c");
    CHECK(serialize_graph(delete_vertex(all.graph, "c")) == serialize_graph(xv.graph));
    CHECK(betti_and_components(xv.graph) == std::make_pair(3, 0));
    CHECK(xv.trace.vertex_map.at("c").empty());

    SUBCASE("loop half") {
        NormalizedDeletion lm = normalize_for_deletion(corpus::loop_multi(), "u");
        GraphWithTrace arc = delete_half_edges_model(lm.graph, "u", {"l.a0.0"});
        auto [c0, b0] = betti_and_components(lm.graph);
        auto [c1, b1] = betti_and_components(arc.graph);
        CHECK(c1 == c0);
        CHECK(b1 == b0 - 1);
    }

    SUBCASE("vertex model of a cycle vertex is an arc") {
        NormalizedDeletion cyc = normalize_for_deletion(corpus::cycle3(), "a");
        CHECK(betti_and_components(delete_vertex_model(cyc.graph, "a").graph) ==
              std::make_pair(1, 0));
    }

    SUBCASE("isolated vertex just disappears") {
        Graph two;
        two.add_vertex("x");
        two.add_vertex("y");
        CHECK(serialize_graph(delete_vertex_model(two, "x").graph) == "v y\n");
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(delete_half_edges_model(nd.graph, "c", {"g1.r0.0"}), InputError);
        CHECK_THROWS_AS(delete_half_edges_model(nd.graph, "c", {}), InputError);
        CHECK_THROWS_AS(delete_half_edges_model(nd.graph, "zz", {"g1.a0.0"}), InputError);
    }
}
