#include "confhom/morse.hpp"

#include <deque>
#include <set>

namespace confhom {

namespace {

// Working state: boundaries as column maps with a parallel row adjacency
// index, plus the accumulated transports. Cells are addressed by
// (degree, original index); dead cells stay allocated but empty.
struct Reducer {
    const ChainComplex& orig;
    int top;
    // cols[d][j]: support of the boundary of cell j in degree d, as row -> value.
    std::vector<std::vector<std::map<int, Int>>> cols;
    // rows[d][i]: columns of degree d with a nonzero entry in row i.
    std::vector<std::vector<std::set<int>>> rows;
    std::vector<std::vector<char>> alive;
    // I columns (original coefficients of each surviving cell) and P rows
    // (expression of every original cell in surviving cells).
    std::vector<std::vector<std::map<int, Int>>> icols, prows;
    // Candidate queue for fill-free cancellations: (degree, col index) for
    // singleton columns, (degree+1 marker via kind) handled uniformly below.
    std::deque<std::pair<int, int>> col_queue;   // (d, j): check column j of degree d
    std::deque<std::pair<int, int>> row_queue;   // (d, i): check row i of boundary d

    explicit Reducer(const ChainComplex& c) : orig(c), top(c.top()) {
        cols.resize(top + 1);
        rows.resize(top + 1);
        alive.resize(top + 1);
        icols.resize(top + 1);
        prows.resize(top + 1);
        for (int d = 0; d <= top; ++d) {
            const int n = c.dim(d), m = c.dim(d - 1);
            cols[d].resize(n);
            rows[d].resize(m);
            alive[d].assign(n, 1);
            icols[d].resize(n);
            prows[d].resize(n);
            for (int j = 0; j < n; ++j) {
                icols[d][j] = {{j, Int(1)}};
                prows[d][j] = {{j, Int(1)}};
            }
            const IntMatrix& b = c.boundary(d);
            for (int i = 0; i < m; ++i)
                for (const auto& [j, v] : b.row(i)) {
                    cols[d][j].emplace(i, v);
                    rows[d][i].insert(j);
                }
        }
    }

    bool is_alive(int d, int j) const { return d >= 0 && d <= top && alive[d][j]; }

    void set_entry(int d, int i, int j, const Int& v) {
        if (v == 0) {
            cols[d][j].erase(i);
            rows[d][i].erase(j);
        } else {
            cols[d][j][i] = v;
            rows[d][i].insert(j);
        }
    }

    // col j of boundary d += c * col src
    void col_addmul(int d, int j, int src, const Int& c) {
        for (const auto& [i, v] : cols[d][src]) {
            auto it = cols[d][j].find(i);
            Int nv = (it == cols[d][j].end() ? Int(0) : it->second) + c * v;
            set_entry(d, i, j, nv);
        }
    }

    void push_col(int d, int j) {
        if (d >= 1 && d <= top) col_queue.emplace_back(d, j);
    }
    void push_row(int d, int i) {
        if (d >= 1 && d <= top) row_queue.emplace_back(d, i);
    }

    // Cancel a = column ja of boundary p against b = row ib; the entry must
    // be +1 or -1.
    void cancel(int p, int ja, int ib) {
        const Int eps = cols[p][ja].at(ib);
        if (eps != 1 && eps != -1) throw InvariantViolation("cancel on a non-unit entry");

        // Degree p columns hitting row ib, and the rows of column ja,
        // captured before mutation.
        std::vector<int> zs(rows[p][ib].begin(), rows[p][ib].end());
        std::map<int, Int> acol = cols[p][ja];

        for (int z : zs) {
            if (z == ja) continue;
            Int v = cols[p][z].at(ib);
            Int c = -eps * v;
            col_addmul(p, z, ja, c);
            // Transport: the surviving cell z now includes c * a upstairs.
            for (const auto& [oi, ov] : icols[p][ja]) {
                auto it = icols[p][z].find(oi);
                Int nv = (it == icols[p][z].end() ? Int(0) : it->second) + c * ov;
                if (nv == 0)
                    icols[p][z].erase(oi);
                else
                    icols[p][z][oi] = nv;
            }
        }
        for (const auto& [i, g] : acol) {
            if (i == ib) continue;
            Int c = -eps * g;
            for (const auto& [oj, ov] : prows[p - 1][ib]) {
                auto it = prows[p - 1][i].find(oj);
                Int nv = (it == prows[p - 1][i].end() ? Int(0) : it->second) + c * ov;
                if (nv == 0)
                    prows[p - 1][i].erase(oj);
                else
                    prows[p - 1][i][oj] = nv;
            }
        }

        // Remove a and b from the complex: clear column ja and row ib of
        // boundary p, the coface row of a in boundary p+1, and the boundary
        // column of b in boundary p-1. Capture the touched neighbours first;
        // they are the new cancellation candidates.
        std::vector<int> up_cols, down_rows;
        if (p + 1 <= top) up_cols.assign(rows[p + 1][ja].begin(), rows[p + 1][ja].end());
        if (p - 1 >= 1)
            for (const auto& [i, v] : cols[p - 1][ib]) down_rows.push_back(i);

        for (const auto& [i, v] : acol) rows[p][i].erase(ja);
        cols[p][ja].clear();
        for (int z : rows[p][ib]) cols[p][z].erase(ib);
        rows[p][ib].clear();
        if (p + 1 <= top) {
            for (int z : up_cols) cols[p + 1][z].erase(ja);
            rows[p + 1][ja].clear();
        }
        if (p - 1 >= 1) {
            for (int i : down_rows) rows[p - 1][i].erase(ib);
            cols[p - 1][ib].clear();
        }
        alive[p][ja] = 0;
        alive[p - 1][ib] = 0;
        icols[p][ja].clear();
        icols[p - 1][ib].clear();
        prows[p][ja].clear();
        prows[p - 1][ib].clear();

        // Refresh candidates whose support shrank or changed.
        for (int z : zs) push_col(p, z);
        for (const auto& [i, v] : acol) push_row(p, i);
        for (int z : up_cols) push_col(p + 1, z);
        for (int i : down_rows) push_row(p - 1, i);
    }

    // Fill-free cancellations driven by the two queues.
    void drain_queues() {
        for (;;) {
            if (!col_queue.empty()) {
                auto [d, j] = col_queue.front();
                col_queue.pop_front();
                if (!alive[d][j] || cols[d][j].size() != 1) continue;
                auto [i, v] = *cols[d][j].begin();
                if (v == 1 || v == -1) cancel(d, j, i);
                continue;
            }
            if (!row_queue.empty()) {
                auto [d, i] = row_queue.front();
                row_queue.pop_front();
                if (!alive[d - 1][i] || rows[d][i].size() != 1) continue;
                int j = *rows[d][i].begin();
                const Int& v = cols[d][j].at(i);
                if (v == 1 || v == -1) cancel(d, j, i);
                continue;
            }
            break;
        }
    }

    // One globally chosen cancellation minimizing fill; false when no unit
    // entry remains anywhere.
    bool cancel_best() {
        long best_fill = -1;
        int bd = -1, bj = -1, bi = -1;
        for (int d = 1; d <= top; ++d) {
            for (int j = 0; j < static_cast<int>(cols[d].size()); ++j) {
                if (!alive[d][j]) continue;
                for (const auto& [i, v] : cols[d][j]) {
                    if (v != 1 && v != -1) continue;
                    long fill = (static_cast<long>(rows[d][i].size()) - 1) *
                                (static_cast<long>(cols[d][j].size()) - 1);
                    if (best_fill < 0 || fill < best_fill) {
                        best_fill = fill;
                        bd = d;
                        bj = j;
                        bi = i;
                    }
                }
            }
        }
        if (bd < 0) return false;
        cancel(bd, bj, bi);
        return true;
    }

    void run() {
        for (int d = 1; d <= top; ++d) {
            for (int j = 0; j < static_cast<int>(cols[d].size()); ++j) push_col(d, j);
            for (int i = 0; i < static_cast<int>(rows[d].size()); ++i) push_row(d, i);
        }
        drain_queues();
        while (cancel_best()) drain_queues();
    }
};

} // namespace

MorseReduction morse_reduce(const ComplexPtr& c) {
    Reducer red(*c);
    red.run();

    const int top = c->top();
    std::vector<std::vector<int>> keep(top + 1);
    std::vector<std::vector<int>> newindex(top + 1);
    std::vector<std::vector<std::string>> labels(top + 1);
    for (int d = 0; d <= top; ++d) {
        newindex[d].assign(c->dim(d), -1);
        for (int j = 0; j < c->dim(d); ++j) {
            if (!red.alive[d][j]) continue;
            newindex[d][j] = static_cast<int>(keep[d].size());
            keep[d].push_back(j);
            labels[d].push_back(c->labels(d)[j]);
        }
    }

    std::vector<IntMatrix> boundary(top + 1);
    for (int d = 0; d <= top; ++d) {
        IntMatrix m(d > 0 ? static_cast<int>(keep[d - 1].size()) : 0,
                    static_cast<int>(keep[d].size()));
        for (int j : keep[d])
            for (const auto& [i, v] : red.cols[d][j]) m.set(newindex[d - 1][i], newindex[d][j], v);
        boundary[d] = std::move(m);
    }
    ComplexPtr reduced = make_complex(std::move(labels), std::move(boundary));

    std::vector<IntMatrix> icomp(top + 1), pcomp(top + 1);
    for (int d = 0; d <= top; ++d) {
        IntMatrix im(c->dim(d), reduced->dim(d));
        for (int j : keep[d])
            for (const auto& [oi, ov] : red.icols[d][j]) im.set(oi, newindex[d][j], ov);
        icomp[d] = std::move(im);
        IntMatrix pm(reduced->dim(d), c->dim(d));
        for (int j : keep[d])
            for (const auto& [oj, ov] : red.prows[d][j]) pm.set(newindex[d][j], oj, ov);
        pcomp[d] = std::move(pm);
    }

    MorseReduction out;
    out.reduced = reduced;
    out.I = ChainMap::create(reduced, c, std::move(icomp));
    out.P = ChainMap::create(c, reduced, std::move(pcomp));
    for (int d = 0; d <= top; ++d) {
        if (out.P.component(d) * out.I.component(d) != IntMatrix::identity(reduced->dim(d)))
            throw InvariantViolation("morse reduction: P after I is not the identity");
    }
    return out;
}

} // namespace confhom
