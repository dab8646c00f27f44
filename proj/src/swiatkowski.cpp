#include "confhom/swiatkowski.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace confhom {

SwComplex::SwComplex(Graph g, int n, std::vector<std::string> vertex_order)
    : graph_(std::move(g)), n_(n) {
    if (n < 0) throw InputError("particle count must be nonnegative");
    if (vertex_order.empty()) {
        vorder_ = graph_.sorted_vertices();
    } else {
        vorder_ = std::move(vertex_order);
        std::set<std::string> seen;
        for (const auto& v : vorder_) {
            if (!graph_.has_vertex(v)) throw InputError("unknown vertex '" + v + "' in order");
            if (!seen.insert(v).second) throw InputError("vertex '" + v + "' repeated in order");
        }
        if (seen.size() != graph_.vertices().size())
            throw InputError("vertex order must cover every vertex");
    }
    for (std::size_t i = 0; i < vorder_.size(); ++i) vpos_[vorder_[i]] = static_cast<int>(i);
    for (const auto& v : graph_.vertices()) halves_[v] = graph_.half_edges_at(v);

    enumerate();

    std::vector<std::vector<std::string>> labels;
    for (const auto& layer : gens_) {
        labels.emplace_back();
        for (const auto& g2 : layer) labels.back().push_back(label(g2));
    }
    std::vector<IntMatrix> boundary;
    boundary.emplace_back(0, dim(0));
    for (int d = 1; d < static_cast<int>(gens_.size()); ++d)
        boundary.push_back(boundary_matrix(d));
    complex_ = make_complex(std::move(labels), std::move(boundary));
}

void SwComplex::enumerate() {
    gens_.assign(1, {});
    index_.assign(1, {});
    const std::vector<std::string> eids = graph_.sorted_edge_ids();
    Gen cur;

    auto store = [&]() {
        int d = degree_of(cur);
        while (d >= static_cast<int>(gens_.size())) {
            gens_.emplace_back();
            index_.emplace_back();
        }
        index_[d][label(cur)] = static_cast<int>(gens_[d].size());
        gens_[d].push_back(cur);
    };

    std::function<void(std::size_t, int)> edges_rec = [&](std::size_t j, int rem) {
        if (j == eids.size()) {
            if (rem == 0) store();
            return;
        }
        edges_rec(j + 1, rem);
        for (int c = 1; c <= rem; ++c) {
            cur.ecount[eids[j]] = c;
            edges_rec(j + 1, rem - c);
        }
        cur.ecount.erase(eids[j]);
    };

    std::function<void(std::size_t, int)> verts_rec = [&](std::size_t i, int rem) {
        if (i == vorder_.size()) {
            edges_rec(0, rem);
            return;
        }
        const std::string& v = vorder_[i];
        verts_rec(i + 1, rem);
        if (rem > 0) {
            cur.vstate[v] = kVert;
            verts_rec(i + 1, rem - 1);
            const auto& hs = halves_.at(v);
            for (std::size_t k = 0; k < hs.size(); ++k) {
                cur.vstate[v] = 2 + static_cast<int>(k);
                verts_rec(i + 1, rem - 1);
            }
            cur.vstate.erase(v);
        }
    };

    verts_rec(0, n_);
}

IntMatrix SwComplex::boundary_matrix(int degree) const {
    IntMatrix m(dim(degree - 1), dim(degree));
    for (int col = 0; col < dim(degree); ++col) {
        const Gen& g = gens_[degree][col];
        int j = 0;
        for (const auto& u : vorder_) {
            auto it = g.vstate.find(u);
            if (it == g.vstate.end() || it->second < 2) continue;
            ++j;
            const std::string h = half_of(u, it->second);
            const std::string eid = split_half(h).first;
            const Int sign = (j % 2 == 1) ? 1 : -1;

            Gen away = g;
            away.vstate.erase(u);
            away.ecount[eid] += 1;
            m.add_at(index_of(degree - 1, away), col, sign);

            Gen stay = g;
            stay.vstate[u] = kVert;
            m.add_at(index_of(degree - 1, stay), col, -sign);
        }
    }
    return m;
}

int SwComplex::vertex_pos(const std::string& v) const {
    auto it = vpos_.find(v);
    if (it == vpos_.end()) throw InputError("unknown vertex '" + v + "'");
    return it->second;
}

const std::vector<std::string>& SwComplex::halves_at(const std::string& v) const {
    auto it = halves_.find(v);
    if (it == halves_.end()) throw InputError("unknown vertex '" + v + "'");
    return it->second;
}

std::string SwComplex::half_of(const std::string& v, int code) const {
    const auto& hs = halves_at(v);
    if (code < 2 || code - 2 >= static_cast<int>(hs.size()))
        throw InvariantViolation("vertex state is not a half-edge state");
    return hs[code - 2];
}

int SwComplex::code_of(const std::string& half) const {
    auto [eid, side] = split_half(half);
    const std::string v = graph_.edge(eid).end[side];
    const auto& hs = halves_at(v);
    auto it = std::find(hs.begin(), hs.end(), half);
    if (it == hs.end()) throw InvariantViolation("half-edge '" + half + "' not found");
    return 2 + static_cast<int>(it - hs.begin());
}

int SwComplex::degree_of(const Gen& g) const {
    int d = 0;
    for (const auto& [v, code] : g.vstate) {
        (void)v;
        if (code >= 2) ++d;
    }
    return d;
}

int SwComplex::weight_of(const Gen& g) const {
    int w = static_cast<int>(g.vstate.size());
    for (const auto& [e, c] : g.ecount) {
        (void)e;
        w += c;
    }
    return w;
}

std::string SwComplex::label(const Gen& g) const {
    std::vector<std::pair<std::pair<std::string, int>, std::string>> toks;
    for (const auto& [v, code] : g.vstate) {
        if (code == kVert)
            toks.push_back({{v, 0}, "V(" + v + ")"});
        else
            toks.push_back({{v, 0}, "H(" + half_of(v, code) + ")"});
    }
    for (const auto& [e, c] : g.ecount)
        toks.push_back({{e, 1}, "E(" + e + ":" + std::to_string(c) + ")"});
    std::sort(toks.begin(), toks.end());
    if (toks.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        if (i) out += ' ';
        out += toks[i].second;
    }
    return out;
}

int SwComplex::index_of(int degree, const Gen& g) const {
    if (degree < 0 || degree >= static_cast<int>(index_.size())) return -1;
    auto it = index_[degree].find(label(g));
    return it == index_[degree].end() ? -1 : it->second;
}

const SwComplex::Gen& SwComplex::gen(int degree, int index) const {
    if (degree < 0 || degree >= static_cast<int>(gens_.size()) || index < 0 ||
        index >= static_cast<int>(gens_[degree].size()))
        throw InvariantViolation("generator index out of range");
    return gens_[degree][index];
}

int SwComplex::dim(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(gens_.size())) return 0;
    return static_cast<int>(gens_[degree].size());
}

SwPtr make_sw(Graph g, int n, std::vector<std::string> vertex_order) {
    return std::make_shared<const SwComplex>(std::move(g), n, std::move(vertex_order));
}

ChainMap sw_inclusion(const SwPtr& sub, const SwPtr& ambient) {
    if (sub->n() != ambient->n())
        throw InputError("inclusion requires equal particle counts");
    return inclusion_by_labels(sub->complex(), ambient->complex());
}

namespace {

// shared skeleton for the two stabilization maps: image = tweak(g)
ChainMap pointwise_map(const SwPtr& src, const SwPtr& dst,
                       const std::function<SwComplex::Gen(const SwComplex::Gen&)>& tweak) {
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src->complex()->top(); ++d) {
        IntMatrix m(dst->complex()->dim(d), src->dim(d));
        for (int i = 0; i < src->dim(d); ++i) {
            SwComplex::Gen img = src->gen(d, i);
            // Half-edge states keep their id, not their code, across graphs:
            // the same half can sit at a different slot when the two graphs
            // disagree about the other halves at that vertex.
            for (auto& [u, state] : img.vstate)
                if (state >= 2) state = dst->code_of(src->half_of(u, state));
            img = tweak(img);
            int row = dst->index_of(d, img);
            if (row < 0)
                throw InvariantViolation("image generator missing: " + dst->label(img));
            m.add_at(row, i, 1);
        }
        comp.push_back(std::move(m));
    }
    return ChainMap::create(src->complex(), dst->complex(), std::move(comp));
}

}  // namespace

ChainMap sw_add_vertex(const SwPtr& src, const SwPtr& dst, const std::string& vertex) {
    if (dst->n() != src->n() + 1)
        throw InputError("adding a particle must raise the count by one");
    if (!dst->graph().has_vertex(vertex)) throw InputError("unknown vertex '" + vertex + "'");
    if (src->graph().has_vertex(vertex))
        throw InputError("vertex '" + vertex + "' already carried by the source graph");
    return pointwise_map(src, dst, [&vertex](const SwComplex::Gen& g) {
        SwComplex::Gen img = g;
        img.vstate[vertex] = SwComplex::kVert;
        return img;
    });
}

ChainMap sw_add_count(const SwPtr& src, const SwPtr& dst, const std::string& edge) {
    if (dst->n() != src->n() + 1)
        throw InputError("adding a particle must raise the count by one");
    if (!dst->graph().has_edge(edge)) throw InputError("unknown edge '" + edge + "'");
    return pointwise_map(src, dst, [&edge](const SwComplex::Gen& g) {
        SwComplex::Gen img = g;
        img.ecount[edge] += 1;
        return img;
    });
}

ChainMap sw_contraction(const SwPtr& src, const SwPtr& dst, const std::string& edge,
                        const std::string& kept) {
    const Edge& e = dst->graph().edge(edge);
    if (e.is_loop()) throw InputError("cannot contract loop '" + edge + "'");
    if (kept != e.end[0] && kept != e.end[1])
        throw InputError("vertex '" + kept + "' is not an endpoint of edge '" + edge + "'");
    const std::string other = e.end[0] == kept ? e.end[1] : e.end[0];
    if (src->n() != dst->n()) throw InputError("contraction requires equal particle counts");
    if (serialize_graph(src->graph()) !=
        serialize_graph(contract_edge_keeping(dst->graph(), edge, kept).graph))
        throw InputError("source complex does not live on the contracted graph");
    {
        std::vector<std::string> expect;
        for (const auto& v : dst->vertex_order())
            if (v != other) expect.push_back(v);
        if (expect != src->vertex_order())
            throw InputError("contraction requires compatible vertex orders");
    }

    const std::string h_kept = half_id(edge, e.end[0] == kept ? 0 : 1);
    const std::string h_other = half_id(edge, e.end[0] == kept ? 1 : 0);
    const int lo = std::min(dst->vertex_pos(kept), dst->vertex_pos(other));
    const int hi = std::max(dst->vertex_pos(kept), dst->vertex_pos(other));

    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src->complex()->top(); ++d) {
        IntMatrix m(dst->complex()->dim(d), src->dim(d));
        for (int i = 0; i < src->dim(d); ++i) {
            const SwComplex::Gen& g = src->gen(d, i);
            SwComplex::Gen base = g;
            int state = SwComplex::kEmpty;
            if (auto it = base.vstate.find(kept); it != base.vstate.end()) {
                state = it->second;
                base.vstate.erase(it);
            }

            auto put = [&](SwComplex::Gen img, const Int& c) {
                int row = dst->index_of(d, img);
                if (row < 0)
                    throw InvariantViolation("image generator missing: " + dst->label(img));
                m.add_at(row, i, c);
            };

            if (state == SwComplex::kEmpty) {
                put(base, 1);
                continue;
            }
            if (state == SwComplex::kVert) {
                SwComplex::Gen img = base;
                img.vstate[kept] = SwComplex::kVert;
                put(img, 1);
                continue;
            }

            // a particle leaves the merged vertex along h; it came from
            // one of the two original endpoints
            const std::string h = src->half_of(kept, state);
            auto [heid, hside] = split_half(h);
            const std::string at = dst->graph().edge(heid).end[hside];

            if (at == kept) {
                SwComplex::Gen img = base;
                img.vstate[kept] = dst->code_of(h);
                put(img, 1);
                continue;
            }

            // crossing the contracted edge passes every moving vertex
            // strictly between the endpoints
            int kappa = 0;
            for (const auto& [u, code] : base.vstate) {
                if (code < 2) continue;
                int p = dst->vertex_pos(u);
                if (lo < p && p < hi) ++kappa;
            }
            const Int ks = (kappa % 2 == 0) ? 1 : -1;

            SwComplex::Gen far = base;
            far.vstate[other] = dst->code_of(h);
            put(far, ks);

            SwComplex::Gen near = base;
            near.vstate[kept] = dst->code_of(h_kept);
            put(near, 1);

            SwComplex::Gen back = base;
            back.vstate[other] = dst->code_of(h_other);
            put(back, -ks);
        }
        comp.push_back(std::move(m));
    }
    return ChainMap::create(src->complex(), dst->complex(), std::move(comp));
}

GraphIso make_graph_iso(const Graph& a, const Graph& b,
                        const std::map<std::string, std::string>& vertex_map,
                        const std::map<std::string, std::string>& edge_map,
                        const std::map<std::string, std::string>& half_overrides) {
    GraphIso iso;
    iso.vertex_map = vertex_map;
    iso.edge_map = edge_map;

    if (a.vertices().size() != b.vertices().size() || a.edges().size() != b.edges().size())
        throw InputError("graphs of different size cannot be isomorphic");
    std::set<std::string> vimg;
    for (const auto& v : a.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end()) throw InputError("vertex '" + v + "' not mapped");
        if (!b.has_vertex(it->second)) throw InputError("unknown image vertex '" + it->second + "'");
        if (!vimg.insert(it->second).second)
            throw InputError("vertex map is not injective at '" + it->second + "'");
    }
    std::set<std::string> eimg;
    for (const auto& e : a.edges()) {
        auto it = edge_map.find(e.id);
        if (it == edge_map.end()) throw InputError("edge '" + e.id + "' not mapped");
        if (!b.has_edge(it->second)) throw InputError("unknown image edge '" + it->second + "'");
        if (!eimg.insert(it->second).second)
            throw InputError("edge map is not injective at '" + it->second + "'");
        const Edge& f = b.edge(it->second);
        std::multiset<std::string> want{vertex_map.at(e.end[0]), vertex_map.at(e.end[1])};
        std::multiset<std::string> have{f.end[0], f.end[1]};
        if (want != have)
            throw InputError("edge map breaks incidence at '" + e.id + "'");
    }

    for (const auto& e : a.edges()) {
        const Edge& f = b.edge(edge_map.at(e.id));
        for (int s = 0; s < 2; ++s) {
            const std::string h = half_id(e.id, s);
            std::string img;
            if (auto it = half_overrides.find(h); it != half_overrides.end()) {
                img = it->second;
            } else if (!e.is_loop()) {
                img = half_id(f.id, f.end[0] == vertex_map.at(e.end[s]) ? 0 : 1);
            } else {
                img = half_id(f.id, s);
            }
            auto [feid, fside] = split_half(img);
            if (feid != f.id || b.edge(feid).end[fside] != vertex_map.at(e.end[s]))
                throw InputError("half-edge image '" + img + "' is inconsistent");
            iso.half_map[h] = img;
        }
    }
    std::set<std::string> himg;
    for (const auto& [h, img] : iso.half_map) {
        (void)h;
        if (!himg.insert(img).second)
            throw InputError("half-edge map is not injective at '" + img + "'");
    }
    return iso;
}

ChainMap sw_relabel(const SwPtr& src, const SwPtr& dst, const GraphIso& iso) {
    if (src->n() != dst->n()) throw InputError("relabeling requires equal particle counts");
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src->complex()->top(); ++d) {
        IntMatrix m(dst->complex()->dim(d), src->dim(d));
        for (int i = 0; i < src->dim(d); ++i) {
            const SwComplex::Gen& g = src->gen(d, i);
            SwComplex::Gen img;
            std::vector<int> perm;  // image positions, source order
            for (const auto& u : src->vertex_order()) {
                auto it = g.vstate.find(u);
                if (it == g.vstate.end()) continue;
                const std::string tu = iso.vertex_map.at(u);
                if (it->second == SwComplex::kVert) {
                    img.vstate[tu] = SwComplex::kVert;
                } else {
                    img.vstate[tu] = dst->code_of(iso.half_map.at(src->half_of(u, it->second)));
                    perm.push_back(dst->vertex_pos(tu));
                }
            }
            for (const auto& [eid, c] : g.ecount) img.ecount[iso.edge_map.at(eid)] = c;

            int inv = 0;
            for (std::size_t x = 0; x < perm.size(); ++x)
                for (std::size_t y = x + 1; y < perm.size(); ++y)
                    if (perm[x] > perm[y]) ++inv;

            int row = dst->index_of(d, img);
            if (row < 0) throw InvariantViolation("image generator missing: " + dst->label(img));
            m.add_at(row, i, (inv % 2 == 0) ? 1 : -1);
        }
        comp.push_back(std::move(m));
    }
    return ChainMap::create(src->complex(), dst->complex(), std::move(comp));
}

std::vector<GraphIso> half_automorphisms(const Graph& g) {
    static const std::size_t kCap = 10000;
    std::vector<GraphIso> out;
    for (const auto& vmap : vertex_automorphisms(g)) {
        // Edges grouped by where the vertex map sends their endpoint pair;
        // any bijection of a source group onto the edges already spanning the
        // image pair completes the automorphism.
        std::map<std::pair<std::string, std::string>, std::vector<std::string>> src_by, dst_by;
        for (const auto& e : g.edges()) {
            auto a = vmap.at(e.end[0]), b = vmap.at(e.end[1]);
            src_by[std::minmax(a, b)].push_back(e.id);
            dst_by[std::minmax(e.end[0], e.end[1])].push_back(e.id);
        }
        bool shaped = src_by.size() == dst_by.size();
        for (const auto& [key, ids] : src_by)
            if (!dst_by.count(key) || dst_by[key].size() != ids.size()) shaped = false;
        if (!shaped) continue;

        std::vector<std::map<std::string, std::string>> emaps{{}};
        for (auto& [key, ids] : src_by) {
            std::vector<std::string> targets = dst_by[key];
            std::sort(targets.begin(), targets.end());
            std::vector<std::map<std::string, std::string>> next;
            do {
                for (auto em : emaps) {
                    for (std::size_t i = 0; i < ids.size(); ++i) em[ids[i]] = targets[i];
                    next.push_back(std::move(em));
                }
                if (next.size() > kCap) throw ResourceOverflow("too many automorphism candidates");
            } while (std::next_permutation(targets.begin(), targets.end()));
            emaps = std::move(next);
        }

        std::vector<std::string> loops;
        for (const auto& e : g.edges())
            if (e.is_loop()) loops.push_back(e.id);

        for (const auto& emap : emaps) {
            // every side choice on loops
            for (std::size_t mask = 0; mask < (std::size_t{1} << loops.size()); ++mask) {
                std::map<std::string, std::string> over;
                for (std::size_t b = 0; b < loops.size(); ++b) {
                    const std::string& l = loops[b];
                    const std::string& t = emap.at(l);
                    int flip = (mask >> b) & 1;
                    over[half_id(l, 0)] = half_id(t, flip);
                    over[half_id(l, 1)] = half_id(t, 1 - flip);
                }
                try {
                    out.push_back(make_graph_iso(g, g, vmap, emap, over));
                } catch (const InputError&) {
                    // inconsistent completion, skip
                }
                if (out.size() > kCap) throw ResourceOverflow("automorphism group too large");
            }
        }
    }
    return out;
}

}  // namespace confhom
