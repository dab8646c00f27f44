#pragma once

#include <string>
#include <vector>

#include "confhom/abelian.hpp"
#include "confhom/chain_complex.hpp"
#include "confhom/graph.hpp"

namespace confhom {

inline constexpr long kDefaultCellCap = 5'000'000;

// Conservative test that the discretized model on this graph is valid
// for n particles: for n >= 2 the graph must be loop-free and simple,
// every cycle must have at least n + 1 edges, and every maximal run of
// degree-two vertices between branch or end vertices must span at least
// n + 1 edges.  Subdividing every edge into n + 1 pieces always
// achieves this.
bool sufficiently_subdivided(const Graph& g, int n);

// Cellular chain complex of the discretized configuration space: cells
// are n pairwise-disjoint closed vertices/edges of the graph (a set for
// the unordered space, a tuple for the ordered one); the dimension is
// the number of edge constituents.  Throws InputError when the graph is
// not sufficiently subdivided and ResourceOverflow past the cell cap.
ComplexPtr build_discrete_conf(const Graph& g, int n, bool ordered,
                               long cell_cap = kDefaultCellCap);

struct OracleAnswer {
    Graph graph;      // the graph the complex was built on
    bool subdivided;  // whether the input had to be refined
    ComplexPtr complex;
    std::vector<FGAbGroup> groups;  // degrees 0 .. n
};

// Independent homology oracle.  Subdivides every edge into n + 1
// pieces first (n >= 2), then runs the discretized complex.
OracleAnswer oracle_homology(const Graph& g, int n, bool ordered,
                             long cell_cap = kDefaultCellCap);

// Subcomplex of the unordered discretized complex spanned by cells with
// at most one constituent touching the closed star of v.  Closed under
// the boundary since replacing an edge by one of its endpoints only
// shrinks constituents.
ComplexPtr star_restricted_complex(const Graph& g, const std::string& v, int n,
                                   long cell_cap = kDefaultCellCap);

// Alternating sum of cell counts.
long euler_characteristic(const ComplexPtr& c);

}  // namespace confhom
