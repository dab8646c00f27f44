#include "confhom/discrete_conf.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>

#include "confhom/homology.hpp"

namespace confhom {

namespace {

// a constituent is a closed vertex ('v') or closed edge ('e') cell
using Part = std::pair<char, std::string>;
using Cell = std::vector<Part>;

std::vector<std::string> touched(const Graph& g, const Part& p) {
    if (p.first == 'v') return {p.second};
    const Edge& e = g.edge(p.second);
    return {e.end[0], e.end[1]};
}

bool disjoint_from(const Graph& g, const Part& p, const std::set<std::string>& used) {
    for (const auto& v : touched(g, p))
        if (used.count(v)) return false;
    return true;
}

std::string cell_label(const Cell& c, bool ordered) {
    if (c.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ' ';
        if (ordered) out += std::to_string(i + 1) + ":";
        out += (c[i].first == 'v' ? "V(" : "E(") + c[i].second + ")";
    }
    return out;
}

int cell_dim(const Cell& c) {
    int d = 0;
    for (const auto& p : c)
        if (p.first == 'e') ++d;
    return d;
}

// all sets of n pairwise-disjoint constituents, in lexicographic pick
// order over sorted vertices followed by sorted edges
std::vector<Cell> enumerate_sets(const Graph& g, int n, long cell_cap) {
    std::vector<Part> universe;
    for (const auto& v : g.sorted_vertices()) universe.push_back({'v', v});
    for (const auto& e : g.sorted_edge_ids()) universe.push_back({'e', e});

    std::vector<Cell> cells;
    Cell cur;
    std::set<std::string> used;
    long count = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(cur.size()) == n) {
            if (++count > cell_cap)
                throw ResourceOverflow("cell cap of " + std::to_string(cell_cap) + " exceeded");
            cells.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < universe.size(); ++i) {
            const Part& p = universe[i];
            if (!disjoint_from(g, p, used)) continue;
            cur.push_back(p);
            for (const auto& v : touched(g, p)) used.insert(v);
            rec(i + 1);
            for (const auto& v : touched(g, p)) used.erase(v);
            cur.pop_back();
        }
    };
    rec(0);
    return cells;
}

}  // namespace

bool sufficiently_subdivided(const Graph& g, int n) {
    if (n <= 1) return true;

    std::set<std::pair<std::string, std::string>> pairs;
    for (const auto& e : g.edges()) {
        if (e.is_loop()) return false;
        auto key = std::minmax(e.end[0], e.end[1]);
        if (!pairs.insert({key.first, key.second}).second) return false;  // parallel pair
    }

    // girth: shortest cycle through e is 1 + (shortest path avoiding e)
    for (const auto& e : g.edges()) {
        std::map<std::string, int> dist{{e.end[0], 0}};
        std::deque<std::string> q{e.end[0]};
        while (!q.empty()) {
            std::string x = q.front();
            q.pop_front();
            for (const auto& h : g.half_edges_at(x)) {
                auto [eid, side] = split_half(h);
                if (eid == e.id) continue;
                const std::string y = g.edge(eid).end[1 - side];
                if (dist.count(y)) continue;
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
        auto it = dist.find(e.end[1]);
        if (it != dist.end() && it->second + 1 <= n) return false;
    }

    // maximal degree-two runs between branch or end vertices
    for (const auto& u : g.vertices()) {
        if (g.degree(u) == 2) continue;
        for (const auto& h : g.half_edges_at(u)) {
            auto [eid, side] = split_half(h);
            std::string at = g.edge(eid).end[1 - side];
            std::string via = eid;
            int len = 1;
            while (g.degree(at) == 2 && len <= static_cast<int>(g.edges().size())) {
                for (const auto& h2 : g.half_edges_at(at)) {
                    auto [eid2, side2] = split_half(h2);
                    if (eid2 == via) continue;
                    at = g.edge(eid2).end[1 - side2];
                    via = eid2;
                    break;
                }
                ++len;
            }
            if (len <= n) return false;
        }
    }
    return true;
}

ComplexPtr build_discrete_conf(const Graph& g, int n, bool ordered, long cell_cap) {
    if (n < 0) throw InputError("particle count must be nonnegative");
    if (!sufficiently_subdivided(g, n))
        throw InputError("graph is not sufficiently subdivided for " + std::to_string(n) +
                         " particles; subdivide every edge into " + std::to_string(n + 1) +
                         " pieces");

    std::vector<Cell> cells = enumerate_sets(g, n, cell_cap);
    if (ordered) {
        std::vector<Cell> tuples;
        long count = 0;
        for (Cell c : cells) {
            std::sort(c.begin(), c.end());
            do {
                if (++count > cell_cap)
                    throw ResourceOverflow("cell cap of " + std::to_string(cell_cap) +
                                           " exceeded");
                tuples.push_back(c);
            } while (std::next_permutation(c.begin(), c.end()));
        }
        cells = std::move(tuples);
    }

    int top = 0;
    for (const auto& c : cells) top = std::max(top, cell_dim(c));
    std::vector<std::vector<Cell>> by_dim(top + 1);
    for (auto& c : cells) by_dim[cell_dim(c)].push_back(std::move(c));

    std::vector<std::vector<std::string>> labels(top + 1);
    std::vector<std::unordered_map<std::string, int>> index(top + 1);
    for (int d = 0; d <= top; ++d)
        for (const auto& c : by_dim[d]) {
            index[d][cell_label(c, ordered)] = static_cast<int>(labels[d].size());
            labels[d].push_back(cell_label(c, ordered));
        }

    std::vector<IntMatrix> boundary;
    boundary.emplace_back(0, static_cast<int>(by_dim[0].size()));
    for (int d = 1; d <= top; ++d) {
        IntMatrix m(static_cast<int>(by_dim[d - 1].size()), static_cast<int>(by_dim[d].size()));
        for (int col = 0; col < static_cast<int>(by_dim[d].size()); ++col) {
            const Cell& c = by_dim[d][col];
            // cube axes ranked by global edge id
            std::vector<std::size_t> axes;
            for (std::size_t i = 0; i < c.size(); ++i)
                if (c[i].first == 'e') axes.push_back(i);
            std::sort(axes.begin(), axes.end(), [&](std::size_t a, std::size_t b) {
                return c[a].second < c[b].second;
            });
            for (std::size_t r = 0; r < axes.size(); ++r) {
                const Edge& e = g.edge(c[axes[r]].second);
                const std::string tail = std::min(e.end[0], e.end[1]);
                const std::string head = std::max(e.end[0], e.end[1]);
                const Int sign = (r % 2 == 0) ? 1 : -1;
                for (int s = 0; s < 2; ++s) {
                    Cell img = c;
                    img[axes[r]] = {'v', s == 0 ? head : tail};
                    // unordered cells are canonically vertices-then-edges,
                    // each block sorted by id, matching enumeration order
                    if (!ordered) std::sort(img.begin(), img.end(),
                                            [](const Part& a, const Part& b) {
                                                return std::pair(a.first == 'e', a.second) <
                                                       std::pair(b.first == 'e', b.second);
                                            });
                    auto it = index[d - 1].find(cell_label(img, ordered));
                    if (it == index[d - 1].end())
                        throw InvariantViolation("boundary cell missing: " +
                                                 cell_label(img, ordered));
                    m.add_at(it->second, col, s == 0 ? sign : -sign);
                }
            }
        }
        boundary.push_back(std::move(m));
    }
    return make_complex(std::move(labels), std::move(boundary));
}

OracleAnswer oracle_homology(const Graph& g, int n, bool ordered, long cell_cap) {
    OracleAnswer out;
    out.subdivided = n >= 2 && !g.edges().empty();
    out.graph = out.subdivided ? subdivide(g, n + 1).graph : g;
    out.complex = build_discrete_conf(out.graph, n, ordered, cell_cap);
    HomologyEngine eng(out.complex);
    for (int d = 0; d <= n; ++d) out.groups.push_back(eng.group(d));
    return out;
}

ComplexPtr star_restricted_complex(const Graph& g, const std::string& v, int n, long cell_cap) {
    if (!g.has_vertex(v)) throw InputError("unknown vertex '" + v + "'");
    ComplexPtr full = build_discrete_conf(g, n, false, cell_cap);

    std::set<std::string> star{v};
    for (const auto& h : g.half_edges_at(v)) {
        auto [eid, side] = split_half(h);
        star.insert(g.edge(eid).end[1 - side]);
    }
    // a constituent touches the closed star exactly when one of its
    // vertices is v or a neighbor of v
    auto meets = [&](char kind, const std::string& id) {
        if (kind == 'v') return star.count(id) > 0;
        const Edge& e = g.edge(id);
        return star.count(e.end[0]) > 0 || star.count(e.end[1]) > 0;
    };
    auto keep = [&](const std::string& label) {
        if (label == "1") return true;
        int meeting = 0;
        std::size_t i = 0;
        while (i < label.size()) {
            std::size_t open = label.find('(', i);
            std::size_t close = label.find(')', open);
            char kind = label[open - 1] == 'V' ? 'v' : 'e';
            if (meets(kind, label.substr(open + 1, close - open - 1))) ++meeting;
            i = close + 2;
        }
        return meeting <= 1;
    };

    std::vector<std::vector<std::string>> labels(full->top() + 1);
    std::vector<std::vector<int>> renum(full->top() + 1);  // old index -> new, -1 dropped
    for (int d = 0; d <= full->top(); ++d) {
        renum[d].assign(full->dim(d), -1);
        for (int i = 0; i < full->dim(d); ++i)
            if (keep(full->labels(d)[i])) {
                renum[d][i] = static_cast<int>(labels[d].size());
                labels[d].push_back(full->labels(d)[i]);
            }
    }

    std::vector<IntMatrix> boundary;
    boundary.emplace_back(0, static_cast<int>(labels[0].size()));
    for (int d = 1; d <= full->top(); ++d) {
        const IntMatrix& big = full->boundary(d);
        IntMatrix m(static_cast<int>(labels[d - 1].size()), static_cast<int>(labels[d].size()));
        for (int r = 0; r < big.rows(); ++r)
            for (const auto& [c, val] : big.row(r)) {
                if (renum[d][c] < 0) continue;
                if (renum[d - 1][r] < 0)
                    throw InvariantViolation("star restriction is not boundary-closed at " +
                                             full->labels(d - 1)[r]);
                m.add_at(renum[d - 1][r], renum[d][c], val);
            }
        boundary.push_back(std::move(m));
    }
    return make_complex(std::move(labels), std::move(boundary));
}

long euler_characteristic(const ComplexPtr& c) {
    long chi = 0;
    for (int d = 0; d <= c->top(); ++d) chi += (d % 2 == 0) ? c->dim(d) : -c->dim(d);
    return chi;
}

}  // namespace confhom
