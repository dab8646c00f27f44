#include "confhom/snf.hpp"

namespace confhom {

namespace {

// State of the elimination: the working matrix together with the four
// transforms, kept consistent by applying mirrored operations.
struct Elim {
    IntMatrix M, U, Uinv, V, Vinv;

    explicit Elim(const IntMatrix& A)
        : M(A),
          U(IntMatrix::identity(A.rows())),
          Uinv(IntMatrix::identity(A.rows())),
          V(IntMatrix::identity(A.cols())),
          Vinv(IntMatrix::identity(A.cols())) {}

    void row_swap(int i, int j) {
        M.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void col_swap(int i, int j) {
        M.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    void row_negate(int i) {
        M.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
    // row i += c * row t
    void row_addmul(int i, int t, const Int& c) {
        M.addmul_row(i, t, c);
        U.addmul_row(i, t, c);
        Uinv.addmul_col(t, i, -c);
    }
    // col j += c * col t
    void col_addmul(int j, int t, const Int& c) {
        M.addmul_col(j, t, c);
        V.addmul_col(j, t, c);
        Vinv.addmul_row(t, j, -c);
    }
};

// Smallest |value| nonzero entry of M restricted to rows >= t, cols >= t;
// ties broken by lowest (row, col). Returns false if the block is zero.
bool find_pivot(const IntMatrix& M, int t, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int i = t; i < M.rows(); ++i) {
        for (auto it = M.row(i).lower_bound(t); it != M.row(i).end(); ++it) {
            Int a = int_abs(it->second);
            if (!found || a < best) {
                found = true;
                best = a;
                pr = i;
                pc = it->first;
            }
        }
    }
    return found;
}

} // namespace

SNFResult snf(const IntMatrix& A) {
    Elim e(A);
    const int rows = A.rows(), cols = A.cols();
    const int mn = rows < cols ? rows : cols;
    int t = 0;
    for (; t < mn; ++t) {
        int pr, pc;
        if (!find_pivot(e.M, t, pr, pc)) break;
        e.row_swap(t, pr);
        e.col_swap(t, pc);
        for (;;) {
            bool clear = true;
            Int q, r;
            for (int i = t + 1; i < rows; ++i) {
                Int v = e.M.get(i, t);
                if (v == 0) continue;
                balanced_div(v, e.M.get(t, t), q, r);
                if (q != 0) e.row_addmul(i, t, -q);
                if (r != 0) clear = false;
            }
            for (int j = t + 1; j < cols; ++j) {
                Int v = e.M.get(t, j);
                if (v == 0) continue;
                balanced_div(v, e.M.get(t, t), q, r);
                if (q != 0) e.col_addmul(j, t, -q);
                if (r != 0) clear = false;
            }
            if (!clear) {
                // A balanced remainder strictly smaller than the pivot
                // survives; promote the new minimum and go again.
                if (!find_pivot(e.M, t, pr, pc))
                    throw InvariantViolation("pivot vanished during elimination");
                e.row_swap(t, pr);
                e.col_swap(t, pc);
                continue;
            }
            // Row and column t are clear. Enforce divisibility of the
            // remaining block by folding an offending row into row t.
            const Int d = e.M.get(t, t);
            bool fold = false;
            for (int i = t + 1; i < rows && !fold; ++i) {
                for (auto it = e.M.row(i).lower_bound(t + 1); it != e.M.row(i).end(); ++it) {
                    if (!divides(d, it->second)) {
                        e.row_addmul(t, i, 1);
                        fold = true;
                        break;
                    }
                }
            }
            if (!fold) break;
        }
        if (e.M.get(t, t) < 0) e.row_negate(t);
    }

    SNFResult out;
    out.U = std::move(e.U);
    out.Uinv = std::move(e.Uinv);
    out.D = std::move(e.M);
    out.V = std::move(e.V);
    out.Vinv = std::move(e.Vinv);
    out.rank = t;
    out.diag.assign(mn, Int(0));
    for (int i = 0; i < t; ++i) out.diag[i] = out.D.get(i, i);
    return out;
}

IntMatrix kernel_basis(const IntMatrix& A) {
    SNFResult s = snf(A);
    std::vector<int> idx;
    for (int j = s.rank; j < A.cols(); ++j) idx.push_back(j);
    return s.V.select_columns(idx);
}

LatticeSolver::LatticeSolver(const IntMatrix& A)
    : rows_(A.rows()), cols_(A.cols()), snf_(snf(A)) {}

std::optional<IntVec> LatticeSolver::solve(const IntVec& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw InvariantViolation("solve: right hand side length mismatch");
    IntVec y = snf_.U * b;
    IntVec xp(cols_, Int(0));
    const int mn = rows_ < cols_ ? rows_ : cols_;
    for (int i = 0; i < rows_; ++i) {
        if (i < mn && snf_.diag[i] != 0) {
            if (!divides(snf_.diag[i], y[i])) return std::nullopt;
            xp[i] = y[i] / snf_.diag[i];
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    return snf_.V * xp;
}

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b) {
    return LatticeSolver(A).solve(b);
}

} // namespace confhom
