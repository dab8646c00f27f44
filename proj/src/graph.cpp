#include "confhom/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace confhom {

void Graph::add_vertex(const std::string& id) {
    if (id.empty()) throw InputError("empty vertex id");
    if (vindex_.count(id)) throw InputError("duplicate vertex id '" + id + "'");
    vindex_[id] = static_cast<int>(vertices_.size());
    vertices_.push_back(id);
}

void Graph::add_edge(const std::string& id, const std::string& u, const std::string& w) {
    if (id.empty()) throw InputError("empty edge id");
    if (eindex_.count(id)) throw InputError("duplicate edge id '" + id + "'");
    if (!vindex_.count(u)) throw InputError("edge '" + id + "' uses undeclared vertex '" + u + "'");
    if (!vindex_.count(w)) throw InputError("edge '" + id + "' uses undeclared vertex '" + w + "'");
    eindex_[id] = static_cast<int>(edges_.size());
    edges_.push_back(Edge{id, {u, w}});
}

const Edge& Graph::edge(const std::string& id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw InputError("unknown edge '" + id + "'");
    return edges_[it->second];
}

std::vector<std::string> Graph::half_edges_at(const std::string& v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    std::vector<std::string> out;
    for (const auto& e : edges_)
        for (int s = 0; s < 2; ++s)
            if (e.end[s] == v) out.push_back(half_id(e.id, s));
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::degree(const std::string& v) const {
    return static_cast<int>(half_edges_at(v).size());
}

std::vector<std::string> Graph::edges_at(const std::string& v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    std::vector<std::string> out;
    for (const auto& e : edges_)
        if (e.end[0] == v || e.end[1] == v) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Graph::sorted_vertices() const {
    std::vector<std::string> out = vertices_;
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> Graph::sorted_edge_ids() const {
    std::vector<std::string> out;
    for (const auto& e : edges_) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::string half_id(const std::string& edge, int side) {
    return edge + (side == 0 ? ".0" : ".1");
}

std::pair<std::string, int> split_half(const std::string& half) {
    if (half.size() >= 2) {
        const std::string tail = half.substr(half.size() - 2);
        if (tail == ".0" || tail == ".1")
            return {half.substr(0, half.size() - 2), tail == ".0" ? 0 : 1};
    }
    throw InputError("malformed half-edge id '" + half + "' (expected <edge>.0 or <edge>.1)");
}

Graph parse_graph(const std::string& text) {
    Graph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "v") {
                if (tok.size() != 2) throw InputError("expected: v <id>");
                g.add_vertex(tok[1]);
            } else if (tok[0] == "e") {
                if (tok.size() != 4) throw InputError("expected: e <id> <vertex> <vertex>");
                g.add_edge(tok[1], tok[2], tok[3]);
            } else {
                throw InputError("unknown directive '" + tok[0] + "'");
            }
        } catch (const InputError& err) {
            throw InputError("line " + std::to_string(lineno) + ": " + err.what());
        }
    }
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    for (const auto& v : g.vertices()) os << "v " << v << "\n";
    for (const auto& e : g.edges()) os << "e " << e.id << " " << e.end[0] << " " << e.end[1] << "\n";
    return os.str();
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const InputError& err) {
        throw InputError(path + ": " + err.what());
    }
}

MinorTrace identity_trace(const Graph& g) {
    MinorTrace t;
    for (const auto& v : g.vertices()) t.vertex_map[v] = v;
    for (const auto& e : g.edges()) {
        t.edge_map[e.id] = {e.id};
        t.half_edge_map[half_id(e.id, 0)] = half_id(e.id, 0);
        t.half_edge_map[half_id(e.id, 1)] = half_id(e.id, 1);
    }
    return t;
}

MinorTrace compose(const MinorTrace& first, const MinorTrace& then) {
    MinorTrace t;
    for (const auto& [v, mid] : first.vertex_map) t.vertex_map[v] = then.vertex_map.at(mid);
    for (const auto& [e, pieces] : first.edge_map) {
        std::vector<std::string> out;
        for (const auto& p : pieces) {
            const auto& next = then.edge_map.at(p);
            out.insert(out.end(), next.begin(), next.end());
        }
        t.edge_map[e] = std::move(out);
    }
    for (const auto& [h, mid] : first.half_edge_map)
        t.half_edge_map[h] = mid.empty() ? std::string() : then.half_edge_map.at(mid);
    return t;
}

GraphWithTrace subdivide(const Graph& g, int k) {
    if (k < 1) throw InputError("subdivision count must be at least 1");
    if (k == 1) return {g, identity_trace(g)};
    GraphWithTrace out;
    out.trace = identity_trace(g);
    for (const auto& v : g.vertices()) out.graph.add_vertex(v);
    for (const auto& e : g.edges()) {
        std::vector<std::string> inner;
        for (int i = 1; i < k; ++i) {
            inner.push_back(e.id + ".c" + std::to_string(i));
            out.graph.add_vertex(inner.back());
        }
        std::vector<std::string> pieces;
        for (int j = 1; j <= k; ++j) {
            std::string pid = e.id + "." + std::to_string(j);
            const std::string& from = (j == 1) ? e.end[0] : inner[j - 2];
            const std::string& to = (j == k) ? e.end[1] : inner[j - 1];
            out.graph.add_edge(pid, from, to);
            pieces.push_back(pid);
        }
        out.trace.edge_map[e.id] = pieces;
        out.trace.half_edge_map[half_id(e.id, 0)] = half_id(pieces.front(), 0);
        out.trace.half_edge_map[half_id(e.id, 1)] = half_id(pieces.back(), 1);
    }
    return out;
}

GraphWithTrace contract_edge_keeping(const Graph& g, const std::string& eid,
                                     const std::string& keep) {
    const Edge& e = g.edge(eid);
    if (e.is_loop()) throw InputError("cannot contract loop '" + eid + "'");
    if (keep != e.end[0] && keep != e.end[1])
        throw InputError("vertex '" + keep + "' is not an endpoint of edge '" + eid + "'");
    const std::string drop = e.end[0] == keep ? e.end[1] : e.end[0];

    GraphWithTrace out;
    for (const auto& v : g.vertices())
        if (v != drop) out.graph.add_vertex(v);
    for (const auto& f : g.edges()) {
        if (f.id == eid) continue;
        std::string u = f.end[0] == drop ? keep : f.end[0];
        std::string w = f.end[1] == drop ? keep : f.end[1];
        out.graph.add_edge(f.id, u, w);
    }
    for (const auto& v : g.vertices()) out.trace.vertex_map[v] = (v == drop) ? keep : v;
    for (const auto& f : g.edges()) {
        if (f.id == eid) {
            out.trace.edge_map[f.id] = {};
            out.trace.half_edge_map[half_id(f.id, 0)] = "";
            out.trace.half_edge_map[half_id(f.id, 1)] = "";
        } else {
            out.trace.edge_map[f.id] = {f.id};
            out.trace.half_edge_map[half_id(f.id, 0)] = half_id(f.id, 0);
            out.trace.half_edge_map[half_id(f.id, 1)] = half_id(f.id, 1);
        }
    }
    return out;
}

GraphWithTrace contract_edge(const Graph& g, const std::string& eid) {
    const Edge& e = g.edge(eid);
    return contract_edge_keeping(g, eid, std::min(e.end[0], e.end[1]));
}

GraphWithTrace contract_edges(const Graph& g, std::vector<std::string> ids) {
    std::sort(ids.begin(), ids.end());
    if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
        throw InputError("duplicate edge id in contraction set");
    for (const auto& id : ids) g.edge(id);  // existence check up front

    GraphWithTrace out{g, identity_trace(g)};
    for (const auto& id : ids) {
        GraphWithTrace step = contract_edge(out.graph, id);
        out.trace = compose(out.trace, step.trace);
        out.graph = std::move(step.graph);
    }
    return out;
}

GraphWithTrace contract_tree(const Graph& g, const std::vector<std::string>& tree_edges) {
    if (tree_edges.empty()) throw InputError("empty tree");
    std::set<std::string> span;
    for (const auto& id : tree_edges) {
        const Edge& e = g.edge(id);
        if (e.is_loop()) throw InputError("tree contains loop '" + id + "'");
        span.insert(e.end[0]);
        span.insert(e.end[1]);
    }
    std::set<std::string> ids(tree_edges.begin(), tree_edges.end());
    if (ids.size() != tree_edges.size()) throw InputError("duplicate edge id in tree");
    if (span.size() != ids.size() + 1) throw InputError("edge set is not a tree");

    // connectivity over the listed edges only
    std::set<std::string> seen{*span.begin()};
    for (bool grew = true; grew;) {
        grew = false;
        for (const auto& id : ids) {
            const Edge& e = g.edge(id);
            if (seen.count(e.end[0]) != seen.count(e.end[1])) {
                seen.insert(e.end[0]);
                seen.insert(e.end[1]);
                grew = true;
            }
        }
    }
    if (seen.size() != span.size()) throw InputError("edge set is not a tree");

    return contract_edges(g, tree_edges);
}

NormalizedDeletion normalize_for_deletion(const Graph& g, const std::string& v,
                                          const std::vector<std::string>& halves) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    if (halves.empty()) throw InputError("no half-edges to delete");
    std::map<std::string, std::vector<int>> by_edge;
    for (const auto& h : halves) {
        auto [eid, side] = split_half(h);
        const Edge& e = g.edge(eid);
        if (e.end[side] != v)
            throw InputError("half-edge '" + h + "' is not incident to vertex '" + v + "'");
        auto& sides = by_edge[eid];
        if (std::find(sides.begin(), sides.end(), side) != sides.end())
            throw InputError("half-edge '" + h + "' listed twice");
        sides.push_back(side);
    }

    NormalizedDeletion out;
    out.trace = identity_trace(g);
    for (const auto& u : g.vertices()) out.graph.add_vertex(u);
    for (const auto& e : g.edges()) {
        auto it = by_edge.find(e.id);
        if (it == by_edge.end()) {
            out.graph.add_edge(e.id, e.end[0], e.end[1]);
            continue;
        }
        if (e.is_loop()) {
            // Both midpoints regardless of how many halves are listed, so
            // the central piece avoids v.
            std::string m0 = e.id + ".m0", m1 = e.id + ".m1";
            out.graph.add_vertex(m0);
            out.graph.add_vertex(m1);
            out.graph.add_edge(e.id + ".a0", v, m0);
            out.graph.add_edge(e.id + ".c", m0, m1);
            out.graph.add_edge(e.id + ".a1", v, m1);
            out.trace.edge_map[e.id] = {e.id + ".a0", e.id + ".c", e.id + ".a1"};
            out.trace.half_edge_map[half_id(e.id, 0)] = e.id + ".a0.0";
            out.trace.half_edge_map[half_id(e.id, 1)] = e.id + ".a1.0";
        } else {
            int s = it->second[0];
            std::string ss = std::to_string(s);
            std::string m = e.id + ".m" + ss;
            std::string a = e.id + ".a" + ss;
            std::string r = e.id + ".r" + ss;
            const std::string& other = e.end[1 - s];
            out.graph.add_vertex(m);
            out.graph.add_edge(a, v, m);  // the listed half sits at side 0
            if (s == 0) {
                out.graph.add_edge(r, m, other);
                out.trace.edge_map[e.id] = {a, r};
                out.trace.half_edge_map[half_id(e.id, 1)] = half_id(r, 1);
            } else {
                out.graph.add_edge(r, other, m);
                out.trace.edge_map[e.id] = {r, a};
                out.trace.half_edge_map[half_id(e.id, 0)] = half_id(r, 0);
            }
            out.trace.half_edge_map[half_id(e.id, s)] = half_id(a, 0);
        }
    }
    for (const auto& h : halves) out.halves.push_back(out.trace.half_edge_map.at(h));
    return out;
}

NormalizedDeletion normalize_for_deletion(const Graph& g, const std::string& v) {
    std::vector<std::string> halves = g.half_edges_at(v);
    if (halves.empty()) return NormalizedDeletion{g, {}, identity_trace(g)};
    return normalize_for_deletion(g, v, halves);
}

Graph delete_edges(const Graph& g, const std::vector<std::string>& edge_ids) {
    for (const auto& id : edge_ids) g.edge(id);
    Graph out;
    for (const auto& v : g.vertices()) out.add_vertex(v);
    for (const auto& e : g.edges())
        if (std::find(edge_ids.begin(), edge_ids.end(), e.id) == edge_ids.end())
            out.add_edge(e.id, e.end[0], e.end[1]);
    return out;
}

Graph delete_vertex(const Graph& g, const std::string& v) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    Graph out;
    for (const auto& u : g.vertices())
        if (u != v) out.add_vertex(u);
    for (const auto& e : g.edges())
        if (e.end[0] != v && e.end[1] != v) out.add_edge(e.id, e.end[0], e.end[1]);
    return out;
}

namespace {

MinorTrace deletion_trace(const Graph& g, const std::vector<std::string>& gone_edges,
                          const std::string& gone_vertex) {
    MinorTrace t = identity_trace(g);
    for (const auto& id : gone_edges) {
        t.edge_map[id] = {};
        t.half_edge_map[half_id(id, 0)] = "";
        t.half_edge_map[half_id(id, 1)] = "";
    }
    if (!gone_vertex.empty()) t.vertex_map[gone_vertex] = "";
    return t;
}

}  // namespace

GraphWithTrace delete_half_edges_model(const Graph& g, const std::string& v,
                                       const std::vector<std::string>& halves) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    if (halves.empty()) throw InputError("no half-edges to delete");
    std::vector<std::string> near;
    for (const auto& h : halves) {
        auto [eid, side] = split_half(h);
        const Edge& e = g.edge(eid);
        if (e.end[side] != v)
            throw InputError("half-edge '" + h + "' is not incident to vertex '" + v + "'");
        if (std::find(near.begin(), near.end(), eid) != near.end())
            throw InputError("half-edge '" + h + "' listed twice");
        near.push_back(eid);
    }
    return GraphWithTrace{delete_edges(g, near), deletion_trace(g, near, "")};
}

GraphWithTrace delete_vertex_model(const Graph& g, const std::string& v) {
    return GraphWithTrace{delete_vertex(g, v), deletion_trace(g, g.edges_at(v), v)};
}

std::pair<int, int> betti_and_components(const Graph& g) {
    std::map<std::string, int> idx;
    for (const auto& v : g.vertices()) idx[v] = static_cast<int>(idx.size());
    std::vector<int> parent(idx.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges()) {
        int a = find(idx[e.end[0]]), b = find(idx[e.end[1]]);
        if (a != b) parent[a] = b;
    }
    int b0 = 0;
    for (size_t i = 0; i < parent.size(); ++i)
        if (find(static_cast<int>(i)) == static_cast<int>(i)) ++b0;
    int b1 = static_cast<int>(g.edges().size()) - static_cast<int>(g.vertices().size()) + b0;
    return {b0, b1};
}

std::vector<std::map<std::string, std::string>> vertex_automorphisms(const Graph& g) {
    auto verts = g.sorted_vertices();
    const int n = static_cast<int>(verts.size());
    if (n > 8) throw InputError("automorphism search is limited to 8 vertices");

    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[verts[i]] = i;
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) ++adj[idx[e.end[0]]][idx[e.end[1]]], ++adj[idx[e.end[1]]][idx[e.end[0]]];
    // Diagonal now counts each loop twice, which is fine as an invariant.

    std::vector<int> perm(n, -1);
    std::vector<char> used(n, 0);
    std::vector<std::map<std::string, std::string>> out;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::map<std::string, std::string> m;
            for (int a = 0; a < n; ++a) m[verts[a]] = verts[perm[a]];
            out.push_back(std::move(m));
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = adj[i][i] == adj[c][c];
            for (int j = 0; ok && j < i; ++j)
                if (adj[i][j] != adj[c][perm[j]]) ok = false;
            if (!ok) continue;
            perm[i] = c;
            used[c] = 1;
            rec(i + 1);
            used[c] = 0;
            perm[i] = -1;
        }
    };
    rec(0);
    return out;
}

} // namespace confhom
