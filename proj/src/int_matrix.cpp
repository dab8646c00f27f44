#include "confhom/int_matrix.hpp"

#include <sstream>

namespace confhom {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

long IntMatrix::nnz() const {
    long total = 0;
    for (const auto& r : row_) total += static_cast<long>(r.size());
    return total;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_) throw InvariantViolation("matrix product shape mismatch");
    IntMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        std::map<int, Int> acc;
        for (const auto& [k, aik] : row_[i]) {
            for (const auto& [j, bkj] : other.row_[k]) {
                auto it = acc.find(j);
                if (it == acc.end())
                    acc.emplace(j, aik * bkj);
                else
                    it->second += aik * bkj;
            }
        }
        for (auto& [j, v] : acc)
            if (v != 0) out.row_[i].emplace(j, std::move(v));
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvariantViolation("matrix sum shape mismatch");
    IntMatrix out = *this;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : other.row_[i]) out.add_at(i, j, v);
    return out;
}

IntMatrix IntMatrix::operator-() const {
    IntMatrix out = *this;
    for (auto& r : out.row_)
        for (auto& [j, v] : r) v = -v;
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& other) const { return *this + (-other); }

bool IntMatrix::operator==(const IntMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && row_ == other.row_;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw InvariantViolation("matrix-vector shape mismatch");
    IntVec out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : row_[i]) out[i] += a * v[j];
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : row_[i]) out.row_[j].emplace(i, v);
    return out;
}

IntVec IntMatrix::column(int c) const {
    IntVec out(rows_, Int(0));
    for (int i = 0; i < rows_; ++i) {
        auto it = row_[i].find(c);
        if (it != row_[i].end()) out[i] = it->second;
    }
    return out;
}

void IntMatrix::set_column(int c, const IntVec& v) {
    if (static_cast<int>(v.size()) != rows_)
        throw InvariantViolation("set_column length mismatch");
    for (int i = 0; i < rows_; ++i) set(i, c, v[i]);
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_) throw InvariantViolation("hstack row mismatch");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        out.row_[i] = a.row_[i];
        for (const auto& [j, v] : b.row_[i]) out.row_[i].emplace(j + a.cols_, v);
    }
    return out;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.cols_) throw InvariantViolation("vstack column mismatch");
    IntMatrix out(a.rows_ + b.rows_, a.cols_);
    for (int i = 0; i < a.rows_; ++i) out.row_[i] = a.row_[i];
    for (int i = 0; i < b.rows_; ++i) out.row_[a.rows_ + i] = b.row_[i];
    return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& idx) const {
    IntMatrix out(rows_, static_cast<int>(idx.size()));
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        int c = idx[k];
        if (c < 0 || c >= cols_) throw InvariantViolation("select_columns index out of range");
        for (int i = 0; i < rows_; ++i) {
            auto it = row_[i].find(c);
            if (it != row_[i].end()) out.row_[i].emplace(k, it->second);
        }
    }
    return out;
}

IntMatrix IntMatrix::select_rows(const std::vector<int>& idx) const {
    IntMatrix out(static_cast<int>(idx.size()), cols_);
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) {
        int r = idx[k];
        if (r < 0 || r >= rows_) throw InvariantViolation("select_rows index out of range");
        out.row_[k] = row_[r];
    }
    return out;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(row_[i], row_[j]);
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (auto& r : row_) {
        auto it_i = r.find(i);
        auto it_j = r.find(j);
        Int vi = it_i == r.end() ? Int(0) : it_i->second;
        Int vj = it_j == r.end() ? Int(0) : it_j->second;
        if (it_i != r.end()) r.erase(it_i);
        if (it_j != r.end()) r.erase(j);
        if (vj != 0) r.emplace(i, vj);
        if (vi != 0) r.emplace(j, vi);
    }
}

void IntMatrix::negate_row(int i) {
    for (auto& [j, v] : row_[i]) v = -v;
}

void IntMatrix::negate_col(int j) {
    for (auto& r : row_) {
        auto it = r.find(j);
        if (it != r.end()) it->second = -it->second;
    }
}

void IntMatrix::addmul_row(int dst, int src, const Int& c) {
    if (c == 0) return;
    if (dst == src) throw InvariantViolation("addmul_row with dst == src");
    for (const auto& [j, v] : row_[src]) add_at(dst, j, c * v);
}

void IntMatrix::addmul_col(int dst, int src, const Int& c) {
    if (c == 0) return;
    if (dst == src) throw InvariantViolation("addmul_col with dst == src");
    for (int i = 0; i < rows_; ++i) {
        auto it = row_[i].find(src);
        if (it != row_[i].end()) add_at(i, dst, c * it->second);
    }
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " ";
            os << get(i, j).get_str();
        }
        os << "]\n";
    }
    return os.str();
}

} // namespace confhom
