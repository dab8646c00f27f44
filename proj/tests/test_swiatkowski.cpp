#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confhom/homology.hpp"
#include "confhom/swiatkowski.hpp"
#include "corpus_builders.hpp"

using namespace confhom;
using confhom_corpus::cycle3;
using confhom_corpus::loop_multi;
using confhom_corpus::path3;
using confhom_corpus::theta;
using confhom_corpus::two_cycles;
using confhom_corpus::ygraph;

namespace {

Graph single_edge() {
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    g.add_edge("e", "a", "b");
    return g;
}

std::vector<std::string> homology_of(const SwPtr& s, int upto) {
    HomologyEngine eng(s->complex());
    std::vector<std::string> out;
    for (int d = 0; d <= upto; ++d) out.push_back(eng.group(d).render());
    return out;
}

}  // namespace

TEST_CASE("zero and one particle") {
    SUBCASE("empty count gives a point") {
        auto s = make_sw(cycle3(), 0);
        CHECK(s->complex()->top() == 0);
        CHECK(s->dim(0) == 1);
        CHECK(s->complex()->labels(0)[0] == "1");
        CHECK(homology_of(s, 1) == std::vector<std::string>{"Z", "0"});
    }
    SUBCASE("no particles fit on an empty graph") {
        auto s = make_sw(Graph{}, 2);
        CHECK(s->dim(0) == 0);
        CHECK(homology_of(s, 0) == std::vector<std::string>{"0"});
    }
    SUBCASE("one particle recovers the graph") {
        for (const auto&[name, g] : confhom_corpus::all()) {
            auto s = make_sw(g, 1);
            auto bb = betti_and_components(g);
            HomologyEngine eng(s->complex());
            INFO("graph ", name);
            CHECK(eng.group(0).free_rank == bb.first);
            CHECK(eng.group(0).torsion.empty());
            CHECK(eng.group(1).free_rank == bb.second);
            CHECK(eng.group(1).torsion.empty());
            CHECK(eng.group(2).trivial());
        }
    }
}

TEST_CASE("two particles on a single edge") {
    auto s = make_sw(single_edge(), 2);
    // weight 2 splits over two vertex slots and the edge count
    CHECK(s->dim(0) == 4);
    CHECK(s->dim(1) == 4);
    CHECK(s->dim(2) == 1);
    CHECK(s->complex()->top() == 2);
    CHECK(homology_of(s, 2) == std::vector<std::string>{"Z", "0", "0"});

    SwComplex::Gen top;
    top.vstate["a"] = s->code_of("e.0");
    top.vstate["b"] = s->code_of("e.1");
    CHECK(s->label(top) == "H(e.0) H(e.1)");
    CHECK(s->index_of(2, top) == 0);

    SwComplex::Gen mixed;
    mixed.vstate["a"] = s->code_of("e.0");
    mixed.ecount["e"] = 1;
    CHECK(s->label(mixed) == "H(e.0) E(e:1)");

    SwComplex::Gen still;
    still.vstate["a"] = SwComplex::kVert;
    still.vstate["b"] = SwComplex::kVert;
    CHECK(s->label(still) == "V(a) V(b)");
    CHECK(s->weight_of(still) == 2);
    CHECK(s->degree_of(still) == 0);
}

TEST_CASE("two particles on small graphs") {
    SUBCASE("cycle stays a circle") {
        CHECK(homology_of(make_sw(cycle3(), 2), 2) ==
              std::vector<std::string>{"Z", "Z", "0"});
    }
    SUBCASE("disjoint cycles") {
        // components contribute independently: two particles split as
        // 2+0, 1+1, 0+2
        auto h = homology_of(make_sw(two_cycles(), 2), 2);
        CHECK(h[0] == "Z^3");
        CHECK(h[1] == "Z^4");
        CHECK(h[2] == "Z");
    }
}

TEST_CASE("subdivision leaves homology alone") {
    auto base = [](const Graph& g, int n, int upto) { return homology_of(make_sw(g, n), upto); };
    for (int k = 2; k <= 3; ++k) {
        CHECK(base(cycle3(), 2, 2) == base(subdivide(cycle3(), k).graph, 2, 2));
    }
    CHECK(base(ygraph(), 2, 2) == base(subdivide(ygraph(), 2).graph, 2, 2));
    CHECK(base(theta(), 2, 2) == base(subdivide(theta(), 2).graph, 2, 2));
    CHECK(base(loop_multi(), 2, 2) == base(subdivide(loop_multi(), 2).graph, 2, 2));
}

TEST_CASE("vertex order changes signs, not homology") {
    auto a = make_sw(cycle3(), 2);
    auto b = make_sw(cycle3(), 2, {"c", "a", "b"});
    CHECK(homology_of(a, 2) == homology_of(b, 2));
    CHECK_THROWS_AS(make_sw(cycle3(), 2, {"a", "b"}), InputError);
    CHECK_THROWS_AS(make_sw(cycle3(), 2, {"a", "b", "b"}), InputError);
    CHECK_THROWS_AS(make_sw(cycle3(), 2, {"a", "b", "x"}), InputError);
    CHECK_THROWS_AS(make_sw(cycle3(), -1), InputError);
}

TEST_CASE("contraction transport") {
    SUBCASE("path edge with degree-two endpoints") {
        auto dst = make_sw(path3(), 2);
        auto src = make_sw(contract_edge(path3(), "e2").graph, 2);
        ChainMap f = sw_contraction(src, dst, "e2", "b");
        HomologyEngine es(src->complex()), ed(dst->complex());
        for (int d = 0; d <= 1; ++d) CHECK(induced_map(f, es, ed, d).is_iso());
    }
    SUBCASE("cycle edge keeps the circle") {
        auto dst = make_sw(cycle3(), 2);
        auto src = make_sw(contract_edge(cycle3(), "e2").graph, 2);
        ChainMap f = sw_contraction(src, dst, "e2", "b");
        HomologyEngine es(src->complex()), ed(dst->complex());
        CHECK(induced_map(f, es, ed, 0).is_iso());
        CHECK(induced_map(f, es, ed, 1).is_iso());
    }
    SUBCASE("either endpoint may be kept") {
        auto dst = make_sw(cycle3(), 2);
        auto keep_b = make_sw(contract_edge_keeping(cycle3(), "e2", "b").graph, 2);
        auto keep_c = make_sw(contract_edge_keeping(cycle3(), "e2", "c").graph, 2);
        ChainMap fb = sw_contraction(keep_b, dst, "e2", "b");
        ChainMap fc = sw_contraction(keep_c, dst, "e2", "c");
        GraphIso sigma = make_graph_iso(keep_b->graph(), keep_c->graph(),
                                        {{"a", "a"}, {"b", "c"}}, {{"e1", "e1"}, {"e3", "e3"}});
        ChainMap rel = sw_relabel(keep_b, keep_c, sigma);
        HomologyEngine eb(keep_b->complex()), ec(keep_c->complex()), ed(dst->complex());
        for (int d = 0; d <= 1; ++d) {
            GroupMap via_c = induced_map(fc, ec, ed, d).compose_after(induced_map(rel, eb, ec, d));
            CHECK(via_c.equal(induced_map(fb, eb, ed, d)));
        }
    }
    SUBCASE("wrong source graph is rejected") {
        auto dst = make_sw(cycle3(), 2);
        auto bad = make_sw(path3(), 2);
        CHECK_THROWS_AS(sw_contraction(bad, dst, "e2", "b"), InputError);
        CHECK_THROWS_AS(sw_contraction(dst, dst, "e2", "a"), InputError);
    }
}

TEST_CASE("relabeling symmetries") {
    SUBCASE("rotation acts trivially on the circle classes") {
        auto s = make_sw(cycle3(), 2);
        GraphIso rho = make_graph_iso(s->graph(), s->graph(),
                                      {{"a", "b"}, {"b", "c"}, {"c", "a"}},
                                      {{"e1", "e2"}, {"e2", "e3"}, {"e3", "e1"}});
        ChainMap f = sw_relabel(s, s, rho);
        HomologyEngine eng(s->complex());
        for (int d = 0; d <= 1; ++d) {
            GroupMap m = induced_map(f, eng, eng, d);
            CHECK(m.is_iso());
            CHECK(m.equal(GroupMap::identity(eng.group(d))));
        }
    }
    SUBCASE("reflection squares to the identity") {
        auto s = make_sw(cycle3(), 2);
        GraphIso refl = make_graph_iso(s->graph(), s->graph(),
                                       {{"a", "a"}, {"b", "c"}, {"c", "b"}},
                                       {{"e1", "e3"}, {"e2", "e2"}, {"e3", "e1"}});
        ChainMap f = sw_relabel(s, s, refl);
        HomologyEngine eng(s->complex());
        for (int d = 0; d <= 1; ++d) {
            GroupMap m = induced_map(f, eng, eng, d);
            CHECK(m.is_iso());
            CHECK(m.compose_after(m).equal(GroupMap::identity(eng.group(d))));
        }
    }
    SUBCASE("loop halves may be swapped explicitly") {
        auto s = make_sw(loop_multi(), 2);
        std::map<std::string, std::string> id_v{{"u", "u"}, {"w", "w"}};
        std::map<std::string, std::string> id_e{{"l", "l"}, {"p1", "p1"}, {"p2", "p2"}};
        GraphIso swap = make_graph_iso(s->graph(), s->graph(), id_v, id_e,
                                       {{"l.0", "l.1"}, {"l.1", "l.0"}});
        ChainMap f = sw_relabel(s, s, swap);
        HomologyEngine eng(s->complex());
        for (int d = 0; d <= 2; ++d) CHECK(induced_map(f, eng, eng, d).is_iso());
    }
    SUBCASE("bad isomorphisms are rejected") {
        Graph g = cycle3();
        CHECK_THROWS_AS(make_graph_iso(g, g, {{"a", "a"}, {"b", "b"}, {"c", "b"}},
                                       {{"e1", "e1"}, {"e2", "e2"}, {"e3", "e3"}}),
                        InputError);
        CHECK_THROWS_AS(make_graph_iso(g, g, {{"a", "b"}, {"b", "a"}, {"c", "c"}},
                                       {{"e1", "e2"}, {"e2", "e1"}, {"e3", "e3"}}),
                        InputError);
        CHECK_THROWS_AS(make_graph_iso(g, path3(), {{"a", "a"}, {"b", "b"}, {"c", "c"}},
                                       {{"e1", "e1"}, {"e2", "e2"}, {"e3", "e3"}}),
                        InputError);
    }
}

TEST_CASE("stabilization maps") {
    Graph arc;  // path3 without its last vertex
    arc.add_vertex("a");
    arc.add_vertex("b");
    arc.add_vertex("c");
    arc.add_edge("e1", "a", "b");
    arc.add_edge("e2", "b", "c");

    auto small = make_sw(arc, 1);
    auto big = make_sw(path3(), 2);

    SUBCASE("inclusion of a subgraph") {
        auto sub = make_sw(arc, 2);
        ChainMap inc = sw_inclusion(sub, big);
        CHECK(inc.component(0).nnz() == sub->dim(0));
        CHECK_THROWS_AS(sw_inclusion(small, big), InputError);
    }
    SUBCASE("adding a stationary particle") {
        ChainMap f = sw_add_vertex(small, big, "d");
        SwComplex::Gen g;
        g.vstate["a"] = SwComplex::kVert;
        SwComplex::Gen img = g;
        img.vstate["d"] = SwComplex::kVert;
        CHECK(f.component(0).get(big->index_of(0, img), small->index_of(0, g)) == 1);
        CHECK_THROWS_AS(sw_add_vertex(small, big, "a"), InputError);
        CHECK_THROWS_AS(sw_add_vertex(small, big, "zz"), InputError);
    }
    SUBCASE("adding an edge particle") {
        ChainMap f = sw_add_count(small, big, "e1");
        SwComplex::Gen g;
        g.ecount["e1"] = 1;
        SwComplex::Gen img;
        img.ecount["e1"] = 2;
        CHECK(f.component(0).get(big->index_of(0, img), small->index_of(0, g)) == 1);
        CHECK_THROWS_AS(sw_add_count(small, big, "zz"), InputError);
    }
}

TEST_CASE("stabilization recodes half states") {
    // In the small graph the half r.0 is the only one at m; in the big
    // graph the edge a sorts ahead of it, so r.0 sits at a later slot.
    Graph x;
    x.add_vertex("m");
    x.add_vertex("u");
    x.add_edge("r", "m", "u");
    Graph big;
    big.add_vertex("m");
    big.add_vertex("u");
    big.add_vertex("v");
    big.add_edge("a", "v", "m");
    big.add_edge("r", "m", "u");

    auto sx = make_sw(x, 1);
    auto sb = make_sw(big, 2);
    ChainMap f = sw_add_vertex(sx, sb, "v");
    int src_i = sx->complex()->index_of(1, "H(r.0)");
    int dst_i = sb->complex()->index_of(1, "H(r.0) V(v)");
    REQUIRE(src_i >= 0);
    REQUIRE(dst_i >= 0);
    CHECK(f.component(1).get(dst_i, src_i) == 1);
}

TEST_CASE("half-edge automorphisms") {
    CHECK(half_automorphisms(path3()).size() == 2);
    CHECK(half_automorphisms(cycle3()).size() == 6);
    CHECK(half_automorphisms(ygraph()).size() == 6);
    CHECK(half_automorphisms(theta()).size() == 12);
    CHECK(half_automorphisms(loop_multi()).size() == 4);

    // every one of them acts on homology invertibly
    auto s = make_sw(theta(), 2);
    HomologyEngine eng(s->complex());
    for (const auto& iso : half_automorphisms(theta())) {
        ChainMap f = sw_relabel(s, s, iso);
        for (int d = 0; d <= 1; ++d) CHECK(induced_map(f, eng, eng, d).is_iso());
    }
}
