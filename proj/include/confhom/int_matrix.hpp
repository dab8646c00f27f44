#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "confhom/bigint.hpp"

namespace confhom {

// Errors carrying the CLI exit-code semantics.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResourceOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvariantViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Sparse integer matrix, row major. Zero entries are never stored.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {
        if (rows < 0 || cols < 0) throw InputError("matrix dimensions must be nonnegative");
    }

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int get(int r, int c) const {
        check_index(r, c);
        auto it = row_[r].find(c);
        return it == row_[r].end() ? Int(0) : it->second;
    }

    void set(int r, int c, const Int& v) {
        check_index(r, c);
        if (v == 0)
            row_[r].erase(c);
        else
            row_[r][c] = v;
    }

    void add_at(int r, int c, const Int& v) {
        check_index(r, c);
        auto it = row_[r].find(c);
        if (it == row_[r].end()) {
            if (v != 0) row_[r].emplace(c, v);
        } else {
            it->second += v;
            if (it->second == 0) row_[r].erase(it);
        }
    }

    const std::map<int, Int>& row(int r) const { return row_[r]; }

    long nnz() const;
    bool is_zero() const { return nnz() == 0; }

    IntMatrix operator*(const IntMatrix& other) const;
    IntMatrix operator+(const IntMatrix& other) const;
    IntMatrix operator-() const;
    IntMatrix operator-(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const;
    bool operator!=(const IntMatrix& other) const { return !(*this == other); }

    IntVec operator*(const IntVec& v) const;

    IntMatrix transpose() const;

    IntVec column(int c) const;
    void set_column(int c, const IntVec& v);

    // Stack side by side / on top of each other.
    static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
    static IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);

    // Columns selected by index list, in the given order.
    IntMatrix select_columns(const std::vector<int>& idx) const;

    // Rows selected by index list, in the given order.
    IntMatrix select_rows(const std::vector<int>& idx) const;

    // Elementary operations, used by the normal form routines.
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    void negate_col(int j);
    void addmul_row(int dst, int src, const Int& c);  // row dst += c * row src
    void addmul_col(int dst, int src, const Int& c);  // col dst += c * col src

    std::string to_string() const;

  private:
    void check_index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw InvariantViolation("matrix index out of range");
    }

    int rows_, cols_;
    std::vector<std::map<int, Int>> row_;
};

inline bool vec_is_zero(const IntVec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

} // namespace confhom
