#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "confhom/discrete_conf.hpp"
#include "confhom/homology.hpp"
#include "confhom/swiatkowski.hpp"
#include "corpus_builders.hpp"

using namespace confhom;
using confhom_corpus::cycle3;
using confhom_corpus::k4;
using confhom_corpus::loop_multi;
using confhom_corpus::path3;
using confhom_corpus::theta;
using confhom_corpus::ygraph;

namespace {

std::vector<std::string> rendered(const std::vector<FGAbGroup>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(g.render());
    return out;
}

long rank_euler(const ComplexPtr& c) {
    HomologyEngine eng(c);
    long chi = 0;
    for (int d = 0; d <= c->top(); ++d) {
        long r = eng.group(d).free_rank;
        chi += (d % 2 == 0) ? r : -r;
    }
    return chi;
}

}  // namespace

TEST_CASE("sufficiency check") {
    CHECK(sufficiently_subdivided(loop_multi(), 1));
    CHECK(sufficiently_subdivided(k4(), 0));

    CHECK_FALSE(sufficiently_subdivided(loop_multi(), 2));  // loop
    CHECK_FALSE(sufficiently_subdivided(theta(), 2));       // parallel edges
    CHECK_FALSE(sufficiently_subdivided(k4(), 2));          // short runs
    CHECK(sufficiently_subdivided(subdivide(k4(), 3).graph, 2));

    // a 3-cycle has girth 3: enough for two particles, not for three
    CHECK(sufficiently_subdivided(cycle3(), 2));
    CHECK_FALSE(sufficiently_subdivided(cycle3(), 3));

    // path with 3 edges: the single degree-two run has 3 edges
    CHECK(sufficiently_subdivided(path3(), 2));
    CHECK_FALSE(sufficiently_subdivided(path3(), 3));

    CHECK_THROWS_AS(build_discrete_conf(k4(), 2, false), InputError);
    CHECK_THROWS_AS(build_discrete_conf(cycle3(), -1, false), InputError);
}

TEST_CASE("basic complexes") {
    SUBCASE("no particles") {
        auto c = build_discrete_conf(cycle3(), 0, false);
        CHECK(c->top() == 0);
        CHECK(c->dim(0) == 1);
        CHECK(HomologyEngine(c).group(0).render() == "Z");
    }
    SUBCASE("one particle is the graph itself") {
        for (const auto& [name, g] : confhom_corpus::all()) {
            INFO("graph ", name);
            auto c = build_discrete_conf(g, 1, false);
            CHECK(c->dim(0) == static_cast<int>(g.vertices().size()));
            CHECK(c->dim(1) == static_cast<int>(g.edges().size()));
            auto bb = betti_and_components(g);
            HomologyEngine eng(c);
            CHECK(eng.group(0).free_rank == bb.first);
            CHECK(eng.group(0).torsion.empty());
            CHECK(eng.group(1).free_rank == bb.second);
            CHECK(eng.group(1).torsion.empty());
        }
    }
    SUBCASE("two particles on a path are contractible") {
        auto c = build_discrete_conf(path3(), 2, false);
        HomologyEngine eng(c);
        CHECK(eng.group(0).render() == "Z");
        CHECK(eng.group(1).trivial());
        CHECK(eng.group(2).trivial());
    }
    SUBCASE("two particles on the tripod") {
        auto c = build_discrete_conf(subdivide(ygraph(), 3).graph, 2, false);
        HomologyEngine eng(c);
        CHECK(eng.group(0).render() == "Z");
        CHECK(eng.group(1).render() == "Z");
        CHECK(eng.group(2).trivial());
    }
}

TEST_CASE("oracle homology") {
    SUBCASE("one particle on the complete graph") {
        auto ans = oracle_homology(k4(), 1, false);
        CHECK_FALSE(ans.subdivided);
        CHECK(rendered(ans.groups) == std::vector<std::string>{"Z", "Z^3"});
    }
    SUBCASE("two particles on the circle") {
        auto ans = oracle_homology(cycle3(), 2, false);
        CHECK(ans.subdivided);
        CHECK(rendered(ans.groups) == std::vector<std::string>{"Z", "Z", "0"});
    }
    SUBCASE("loops are handled by refinement") {
        auto ans = oracle_homology(loop_multi(), 2, false);
        CHECK(ans.subdivided);
        CHECK(ans.groups[0].render() == "Z");
    }
    SUBCASE("cell cap trips") {
        CHECK_THROWS_AS(oracle_homology(k4(), 3, false, 100), ResourceOverflow);
    }
}

TEST_CASE("ordered variant") {
    SUBCASE("one particle agrees with the unordered one") {
        auto a = oracle_homology(ygraph(), 1, true);
        auto b = oracle_homology(ygraph(), 1, false);
        CHECK(rendered(a.groups) == rendered(b.groups));
    }
    SUBCASE("double cover of the circle") {
        auto ord = oracle_homology(cycle3(), 2, true);
        auto uno = oracle_homology(cycle3(), 2, false);
        CHECK(euler_characteristic(ord.complex) == 2 * euler_characteristic(uno.complex));
        long chi_o = 0, chi_u = 0;
        for (int d = 0; d <= 2; ++d) {
            long sign = (d % 2 == 0) ? 1 : -1;
            chi_o += sign * ord.groups[d].free_rank;
            chi_u += sign * uno.groups[d].free_rank;
        }
        CHECK(chi_o == 2 * chi_u);
        // ordered two-particle circle is again a circle
        CHECK(rendered(ord.groups) == std::vector<std::string>{"Z", "Z", "0"});
    }
}

TEST_CASE("cell counts match homology ranks") {
    for (bool ordered : {false, true}) {
        auto ans = oracle_homology(cycle3(), 2, ordered);
        CHECK(euler_characteristic(ans.complex) == rank_euler(ans.complex));
    }
    auto ans = oracle_homology(confhom_corpus::k4_minus(), 2, false);
    CHECK(euler_characteristic(ans.complex) == rank_euler(ans.complex));
}

TEST_CASE("engines agree") {
    for (const auto& name : {"path3", "cycle3", "ygraph", "theta", "loop_multi"}) {
        Graph g;
        for (const auto& ng : confhom_corpus::all())
            if (ng.name == name) g = ng.graph;
        INFO("graph ", name);
        auto ans = oracle_homology(g, 2, false);
        HomologyEngine sw(make_sw(g, 2)->complex());
        for (int d = 0; d <= 2; ++d) CHECK(ans.groups[d].same_type(sw.group(d)));
    }
}

TEST_CASE("star restriction") {
    SUBCASE("one particle keeps everything") {
        auto full = build_discrete_conf(ygraph(), 1, false);
        auto res = star_restricted_complex(ygraph(), "c", 1);
        CHECK(res->dim(0) == full->dim(0));
        CHECK(res->dim(1) == full->dim(1));
    }
    SUBCASE("tripod center") {
        Graph g = subdivide(ygraph(), 3).graph;
        auto full = build_discrete_conf(g, 2, false);
        auto res = star_restricted_complex(g, "c", 2);
        CHECK(res->dim(1) < full->dim(1));
        HomologyEngine ef(full), er(res);
        for (int d = 0; d <= 2; ++d) CHECK(ef.group(d).same_type(er.group(d)));
    }
    SUBCASE("three on the circle") {
        Graph g = subdivide(cycle3(), 4).graph;
        auto full = build_discrete_conf(g, 3, false);
        auto res = star_restricted_complex(g, "a", 3);
        HomologyEngine ef(full), er(res);
        for (int d = 0; d <= 3; ++d) CHECK(ef.group(d).same_type(er.group(d)));
    }
    SUBCASE("unknown vertex") {
        CHECK_THROWS_AS(star_restricted_complex(ygraph(), "zz", 1), InputError);
    }
}
