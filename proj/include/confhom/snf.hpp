#pragma once

#include <optional>

#include "confhom/int_matrix.hpp"

namespace confhom {

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal,
// entries nonnegative and forming a divisibility chain d1 | d2 | ...
// The inverses Uinv, Vinv are maintained alongside by mirrored elementary
// operations, so both coordinate changes are available exactly.
struct SNFResult {
    IntMatrix U, Uinv, D, V, Vinv;
    IntVec diag;   // diagonal of D, length min(rows, cols)
    int rank = 0;  // number of nonzero diagonal entries
};

SNFResult snf(const IntMatrix& A);

// Basis of the integer kernel of A, one basis vector per column.
// The lattice spanned is saturated: every integer kernel vector is an
// integer combination of the columns.
IntMatrix kernel_basis(const IntMatrix& A);

// Repeated exact solves of A * x = b against a fixed A.
class LatticeSolver {
  public:
    explicit LatticeSolver(const IntMatrix& A);

    // A particular integer solution of A * x = b, if one exists.
    std::optional<IntVec> solve(const IntVec& b) const;

    const SNFResult& result() const { return snf_; }

  private:
    int rows_, cols_;
    SNFResult snf_;
};

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b);

} // namespace confhom
