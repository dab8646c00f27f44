#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "confhom/int_matrix.hpp"

namespace confhom {

// Finite undirected multigraph with string ids. Edges carry two sides, 0 and
// 1; the half-edge of edge e at side s has id "e.s". Loops are allowed and
// have both halves at the same vertex.
struct Edge {
    std::string id;
    std::string end[2];

    bool is_loop() const { return end[0] == end[1]; }
};

class Graph {
  public:
    void add_vertex(const std::string& id);
    void add_edge(const std::string& id, const std::string& u, const std::string& w);

    bool has_vertex(const std::string& id) const { return vindex_.count(id) != 0; }
    bool has_edge(const std::string& id) const { return eindex_.count(id) != 0; }
    const Edge& edge(const std::string& id) const;

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Half-edge ids incident to a vertex, sorted; loops contribute both.
    std::vector<std::string> half_edges_at(const std::string& v) const;
    int degree(const std::string& v) const;

    // Edge ids incident to a vertex, sorted, loops listed once.
    std::vector<std::string> edges_at(const std::string& v) const;

    std::vector<std::string> sorted_vertices() const;
    std::vector<std::string> sorted_edge_ids() const;

  private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::map<std::string, int> vindex_, eindex_;
};

std::string half_id(const std::string& edge, int side);
// Splits "e.s" into (edge id, side); the side marker is the final ".0"/".1".
std::pair<std::string, int> split_half(const std::string& half);

// Text format: one directive per line, "v <id>" or "e <id> <u> <w>", with
// "#" comments and blank lines. Vertices must be declared before edges use
// them. Errors carry 1-based line numbers.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);
Graph load_graph_file(const std::string& path);

// Record of what a minor operation did to the ids: vertices map to vertices,
// an edge maps to the ordered list of pieces that now cover it (empty when
// the edge was removed), a half-edge maps to the half now sitting at the
// same spot (empty string when it disappeared).
struct MinorTrace {
    std::map<std::string, std::string> vertex_map;
    std::map<std::string, std::vector<std::string>> edge_map;
    std::map<std::string, std::string> half_edge_map;
};

MinorTrace identity_trace(const Graph& g);
MinorTrace compose(const MinorTrace& first, const MinorTrace& then);

struct GraphWithTrace {
    Graph graph;
    MinorTrace trace;
};

// Each edge e becomes a path of k pieces e.1 ... e.k ordered from side 0,
// with interior vertices e.c1 ... e.c(k-1). k = 1 is the identity.
GraphWithTrace subdivide(const Graph& g, int k);

// Contract a non-loop edge, keeping the lexicographically smaller endpoint.
GraphWithTrace contract_edge(const Graph& g, const std::string& e);

// Contract a non-loop edge, keeping a chosen endpoint.
GraphWithTrace contract_edge_keeping(const Graph& g, const std::string& e,
                                     const std::string& keep);

// Iterated contraction of a set of edges, processed in ascending id order.
GraphWithTrace contract_edges(const Graph& g, std::vector<std::string> ids);

// Contract the edge set of a subtree. The set must span a connected,
// acyclic subgraph; edges are contracted in ascending id order and the
// merged vertex is the smallest id among the tree's vertices, so the
// result does not depend on the listed order.
GraphWithTrace contract_tree(const Graph& g, const std::vector<std::string>& tree_edges);

// Preparation for deleting half-edges at v: the edge of every listed half is
// subdivided so that each listed half sits on a short piece a_h = e.a{s}
// from v (side 0) to a fresh midpoint e.m{s}. Loops are subdivided twice
// into e.a0, e.c, e.a1 so that the central piece avoids v.
struct NormalizedDeletion {
    Graph graph;                      // the refined graph
    std::vector<std::string> halves;  // new ids of the input halves, in order
    MinorTrace trace;
};
NormalizedDeletion normalize_for_deletion(const Graph& g, const std::string& v,
                                          const std::vector<std::string>& halves);

// Normalization at every half-edge of v (loops get both midpoints). A
// degree-0 vertex leaves the graph unchanged.
NormalizedDeletion normalize_for_deletion(const Graph& g, const std::string& v);

// Remove the listed edges, keeping every vertex.
Graph delete_edges(const Graph& g, const std::vector<std::string>& edge_ids);

// Remove a vertex together with all incident edges.
Graph delete_vertex(const Graph& g, const std::string& v);

// Compact model of the graph minus the open half-edges H at v. Expects
// the normalized graph and post-normalization half ids; deletes the
// near piece under each listed half and keeps every vertex, so the
// midpoints stay as leaves and v survives (possibly isolated).
GraphWithTrace delete_half_edges_model(const Graph& g, const std::string& v,
                                       const std::vector<std::string>& halves);

// Compact model of the graph minus v: drop v with all incident edges.
// On a normalized graph the midpoints survive as leaves.
GraphWithTrace delete_vertex_model(const Graph& g, const std::string& v);

// (number of components, first betti number).
std::pair<int, int> betti_and_components(const Graph& g);

// All vertex bijections preserving edge multiplicities, for graphs with at
// most 8 vertices.
std::vector<std::map<std::string, std::string>> vertex_automorphisms(const Graph& g);

} // namespace confhom
