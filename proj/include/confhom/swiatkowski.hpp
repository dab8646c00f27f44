#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "confhom/chain_complex.hpp"
#include "confhom/graph.hpp"

namespace confhom {

// Cube-free chain model for the unordered configuration space of n
// particles on a graph.  A generator places a state on every vertex
// (empty, a stationary particle, or a particle leaving along one of the
// incident half-edges) and a count of particles on every open edge.
// The number of occupied vertices plus the sum of the edge counts is n,
// and the homological degree is the number of moving (half-edge)
// vertices.
//
// Signs are Koszul with respect to a fixed total order on the vertices;
// the order is part of the complex so that related complexes (nested
// subgraphs, contractions) can be built with compatible conventions.
class SwComplex {
  public:
    static constexpr int kEmpty = 0;
    static constexpr int kVert = 1;
    // codes >= 2 mean "particle on the (code - 2)-th half-edge at the
    // vertex", indexing into halves_at(v)

    struct Gen {
        std::map<std::string, int> vstate;  // vertex -> code, empty vertices absent
        std::map<std::string, int> ecount;  // edge -> count, zero counts absent
        bool operator==(const Gen&) const = default;
    };

    // vertex_order empty means "sorted by id"; otherwise it must be a
    // permutation of the vertex set
    SwComplex(Graph g, int n, std::vector<std::string> vertex_order = {});

    const Graph& graph() const { return graph_; }
    int n() const { return n_; }
    const ComplexPtr& complex() const { return complex_; }
    const std::vector<std::string>& vertex_order() const { return vorder_; }

    int vertex_pos(const std::string& v) const;
    const std::vector<std::string>& halves_at(const std::string& v) const;
    // half id of a vertex state code >= 2
    std::string half_of(const std::string& v, int code) const;
    // state code placing a particle on the given half-edge
    int code_of(const std::string& half) const;

    int degree_of(const Gen& g) const;
    int weight_of(const Gen& g) const;
    std::string label(const Gen& g) const;
    // index within the given degree, -1 if no such generator
    int index_of(int degree, const Gen& g) const;
    const Gen& gen(int degree, int index) const;
    int dim(int degree) const;

  private:
    void enumerate();
    IntMatrix boundary_matrix(int degree) const;

    Graph graph_;
    int n_;
    std::vector<std::string> vorder_;
    std::map<std::string, int> vpos_;
    std::map<std::string, std::vector<std::string>> halves_;
    std::vector<std::vector<Gen>> gens_;
    std::vector<std::unordered_map<std::string, int>> index_;
    ComplexPtr complex_;
};

using SwPtr = std::shared_ptr<const SwComplex>;

SwPtr make_sw(Graph g, int n, std::vector<std::string> vertex_order = {});

// Inclusion of complexes induced by a subgraph sharing vertex and edge
// ids with the ambient graph (same n); matches generators by label.
ChainMap sw_inclusion(const SwPtr& sub, const SwPtr& ambient);

// S(n-1) -> S(n) adding a stationary particle at a vertex of the target
// graph.  No sign: stationary particles are Koszul-even.
ChainMap sw_add_vertex(const SwPtr& src, const SwPtr& dst, const std::string& vertex);

// S(n-1) -> S(n) adding one particle to an edge of the target graph.
ChainMap sw_add_count(const SwPtr& src, const SwPtr& dst, const std::string& edge);

// Chain map transporting the contraction of a non-loop edge: src is the
// complex of contract_edge_keeping(dst.graph, edge, kept) with the same
// n and a compatible vertex order (dst order minus the dropped vertex).
// States at the merged vertex split according to which original
// endpoint their half-edge came from; a particle leaving the merged
// vertex along a half from the far endpoint travels across the
// contracted edge, which costs a Koszul sign for every moving vertex
// strictly between the two endpoints.
ChainMap sw_contraction(const SwPtr& src, const SwPtr& dst, const std::string& edge,
                        const std::string& kept);

// Graph isomorphism as id dictionaries; half_map is derived for
// non-loop edges and side-preserving on loops unless overridden.
struct GraphIso {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::string> edge_map;
    std::map<std::string, std::string> half_map;
};

GraphIso make_graph_iso(const Graph& a, const Graph& b,
                        const std::map<std::string, std::string>& vertex_map,
                        const std::map<std::string, std::string>& edge_map,
                        const std::map<std::string, std::string>& half_overrides = {});

// Chain-level action of a graph isomorphism.  The image generator is
// the relabeled one; the sign is the parity of the permutation the
// relabeling induces on the moving vertices (ordered by the respective
// vertex orders).
ChainMap sw_relabel(const SwPtr& src, const SwPtr& dst, const GraphIso& iso);

// Every automorphism of the half-edge structure: each vertex bijection
// from vertex_automorphisms, completed by every compatible edge
// bijection (parallel edges may permute) and every loop side choice.
std::vector<GraphIso> half_automorphisms(const Graph& g);

}  // namespace confhom
