#include "confhom/chain_complex.hpp"

#include <unordered_map>

namespace confhom {

ChainComplex::ChainComplex(std::vector<std::vector<std::string>> labels,
                           std::vector<IntMatrix> boundary)
    : labels_(std::move(labels)), boundary_(std::move(boundary)) {
    if (labels_.size() != boundary_.size())
        throw InvariantViolation("chain complex: labels/boundary length mismatch");
    for (int d = 0; d <= top(); ++d) {
        if (boundary_[d].rows() != dim(d - 1) || boundary_[d].cols() != dim(d))
            throw InvariantViolation("chain complex: boundary shape mismatch in degree " +
                                     std::to_string(d));
    }
    for (int d = 1; d <= top(); ++d) {
        if (!(boundary_[d - 1] * boundary_[d]).is_zero())
            throw InvariantViolation("chain complex: boundary squared nonzero in degree " +
                                     std::to_string(d));
    }
}

long ChainComplex::total_cells() const {
    long n = 0;
    for (int d = 0; d <= top(); ++d) n += dim(d);
    return n;
}

int ChainComplex::index_of(int d, const std::string& label) const {
    if (d < 0 || d > top()) return -1;
    for (int i = 0; i < dim(d); ++i)
        if (labels_[d][i] == label) return i;
    return -1;
}

ComplexPtr make_complex(std::vector<std::vector<std::string>> labels,
                        std::vector<IntMatrix> boundary) {
    return std::make_shared<ChainComplex>(std::move(labels), std::move(boundary));
}

ChainMap ChainMap::create(ComplexPtr src, ComplexPtr dst, std::vector<IntMatrix> comp, int shift,
                          bool verify) {
    ChainMap f;
    f.src_ = std::move(src);
    f.dst_ = std::move(dst);
    f.shift_ = shift;
    f.comp_ = std::move(comp);
    if (static_cast<int>(f.comp_.size()) != f.src_->top() + 1)
        throw InvariantViolation("chain map: one component per source degree required");
    for (int d = 0; d <= f.src_->top(); ++d) {
        if (f.comp_[d].rows() != f.dst_->dim(d + shift) || f.comp_[d].cols() != f.src_->dim(d))
            throw InvariantViolation("chain map: component shape mismatch in degree " +
                                     std::to_string(d));
    }
    if (verify && !f.commutes())
        throw InvariantViolation("chain map does not commute with the boundaries");
    return f;
}

ChainMap ChainMap::identity(ComplexPtr c) {
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= c->top(); ++d) comp.push_back(IntMatrix::identity(c->dim(d)));
    return create(c, c, std::move(comp), 0, false);
}

ChainMap ChainMap::zero(ComplexPtr src, ComplexPtr dst, int shift) {
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src->top(); ++d)
        comp.push_back(IntMatrix(dst->dim(d + shift), src->dim(d)));
    return create(src, dst, std::move(comp), shift, false);
}

IntMatrix ChainMap::component(int d) const {
    if (d >= 0 && d <= src_->top()) return comp_[d];
    return IntMatrix(dst_->dim(d + shift_), src_->dim(d));
}

bool ChainMap::commutes() const {
    for (int d = 1; d <= src_->top(); ++d) {
        IntMatrix lhs = dst_->boundary_or_zero(d + shift_) * comp_[d];
        IntMatrix rhs = component(d - 1) * src_->boundary(d);
        if (lhs != rhs) return false;
    }
    return true;
}

ChainMap ChainMap::compose_after(const ChainMap& inner) const {
    if (inner.dst_.get() != src_.get())
        throw InvariantViolation("chain map composition: middle complex mismatch");
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= inner.src_->top(); ++d)
        comp.push_back(component(d + inner.shift_) * inner.comp_[d]);
    return create(inner.src_, dst_, std::move(comp), shift_ + inner.shift_, false);
}

ChainMap ChainMap::operator+(const ChainMap& o) const {
    if (src_.get() != o.src_.get() || dst_.get() != o.dst_.get() || shift_ != o.shift_)
        throw InvariantViolation("chain map sum: shape mismatch");
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src_->top(); ++d) comp.push_back(comp_[d] + o.comp_[d]);
    return create(src_, dst_, std::move(comp), shift_, false);
}

ChainMap ChainMap::operator-() const {
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src_->top(); ++d) comp.push_back(-comp_[d]);
    return create(src_, dst_, std::move(comp), shift_, false);
}

ChainMap ChainMap::operator-(const ChainMap& o) const { return *this + (-o); }

bool ChainMap::equal(const ChainMap& o) const {
    if (src_.get() != o.src_.get() || dst_.get() != o.dst_.get() || shift_ != o.shift_)
        return false;
    for (int d = 0; d <= src_->top(); ++d)
        if (comp_[d] != o.comp_[d]) return false;
    return true;
}

ComplexPtr suspension(const ComplexPtr& a) {
    std::vector<std::vector<std::string>> labels(a->top() + 2);
    std::vector<IntMatrix> boundary(a->top() + 2);
    labels[0] = {};
    boundary[0] = IntMatrix(0, 0);
    for (int d = 1; d <= a->top() + 1; ++d) {
        labels[d] = a->labels(d - 1);
        boundary[d] = -a->boundary_or_zero(d - 1);
    }
    return make_complex(std::move(labels), std::move(boundary));
}

MappingCone mapping_cone(const ChainMap& f) {
    if (f.shift() != 0) throw InputError("mapping cone requires a shift 0 map");
    const ComplexPtr& A = f.source();
    const ComplexPtr& B = f.target();
    int ctop = B->top();
    if (A->top() + 1 > ctop) ctop = A->top() + 1;
    if (ctop < 0) ctop = 0;

    std::vector<std::vector<std::string>> labels(ctop + 1);
    std::vector<IntMatrix> boundary(ctop + 1);
    for (int d = 0; d <= ctop; ++d) {
        if (d <= B->top())
            for (const auto& l : B->labels(d)) labels[d].push_back("b:" + l);
        if (d - 1 >= 0 && d - 1 <= A->top())
            for (const auto& l : A->labels(d - 1)) labels[d].push_back("a:" + l);

        const int rb = B->dim(d - 1), ra = A->dim(d - 2);
        const int cb = B->dim(d), ca = A->dim(d - 1);
        IntMatrix m(rb + ra, cb + ca);
        IntMatrix dB = B->boundary_or_zero(d);
        for (int i = 0; i < rb; ++i)
            for (const auto& [j, v] : dB.row(i)) m.set(i, j, v);
        IntMatrix fc = f.component(d - 1);
        for (int i = 0; i < rb; ++i)
            for (const auto& [j, v] : fc.row(i)) m.set(i, cb + j, v);
        IntMatrix dA = A->boundary_or_zero(d - 1);
        for (int i = 0; i < ra; ++i)
            for (const auto& [j, v] : dA.row(i)) m.set(rb + i, cb + j, -v);
        boundary[d] = std::move(m);
    }

    MappingCone out;
    out.cone = make_complex(std::move(labels), std::move(boundary));
    out.suspended = suspension(A);

    std::vector<IntMatrix> inc, proj;
    for (int d = 0; d <= B->top(); ++d) {
        IntMatrix m(out.cone->dim(d), B->dim(d));
        for (int j = 0; j < B->dim(d); ++j) m.set(j, j, 1);
        inc.push_back(std::move(m));
    }
    for (int d = 0; d <= out.cone->top(); ++d) {
        IntMatrix m(out.suspended->dim(d), out.cone->dim(d));
        const int cb = B->dim(d);
        for (int j = 0; j < A->dim(d - 1); ++j) m.set(j, cb + j, 1);
        proj.push_back(std::move(m));
    }
    out.inclusion = ChainMap::create(B, out.cone, std::move(inc));
    out.projection = ChainMap::create(out.cone, out.suspended, std::move(proj));
    return out;
}

DirectSum direct_sum(const std::vector<ComplexPtr>& parts, const std::vector<std::string>& prefixes) {
    int top = -1;
    for (const auto& p : parts)
        if (p->top() > top) top = p->top();

    std::vector<std::vector<std::string>> labels(top + 1);
    std::vector<IntMatrix> boundary(top + 1);
    std::vector<std::vector<int>> offsets(top + 2, std::vector<int>(parts.size() + 1, 0));
    for (int d = 0; d <= top + 1; ++d)
        for (size_t k = 0; k < parts.size(); ++k)
            offsets[d][k + 1] = offsets[d][k] + parts[k]->dim(d);

    for (int d = 0; d <= top; ++d) {
        for (size_t k = 0; k < parts.size(); ++k) {
            std::string pre = k < prefixes.size() ? prefixes[k] : (std::to_string(k) + ":");
            if (d <= parts[k]->top())
                for (const auto& l : parts[k]->labels(d)) labels[d].push_back(pre + l);
        }
        int rows = d > 0 ? offsets[d - 1][parts.size()] : 0;
        IntMatrix m(rows, offsets[d][parts.size()]);
        for (size_t k = 0; k < parts.size(); ++k) {
            IntMatrix b = parts[k]->boundary_or_zero(d);
            int ro = d > 0 ? offsets[d - 1][k] : 0;
            int co = offsets[d][k];
            for (int i = 0; i < b.rows(); ++i)
                for (const auto& [j, v] : b.row(i)) m.set(ro + i, co + j, v);
        }
        boundary[d] = std::move(m);
    }

    DirectSum out;
    out.total = make_complex(std::move(labels), std::move(boundary));
    for (size_t k = 0; k < parts.size(); ++k) {
        std::vector<IntMatrix> inc, proj;
        for (int d = 0; d <= parts[k]->top(); ++d) {
            IntMatrix m(out.total->dim(d), parts[k]->dim(d));
            for (int j = 0; j < parts[k]->dim(d); ++j) m.set(offsets[d][k] + j, j, 1);
            inc.push_back(std::move(m));
        }
        for (int d = 0; d <= out.total->top(); ++d) {
            IntMatrix m(parts[k]->dim(d), out.total->dim(d));
            for (int j = 0; j < parts[k]->dim(d); ++j) m.set(j, offsets[d][k] + j, 1);
            proj.push_back(std::move(m));
        }
        out.inclusions.push_back(ChainMap::create(parts[k], out.total, std::move(inc)));
        out.projections.push_back(ChainMap::create(out.total, parts[k], std::move(proj)));
    }
    return out;
}

ChainMap inclusion_by_labels(ComplexPtr src, ComplexPtr dst) {
    std::vector<IntMatrix> comp;
    for (int d = 0; d <= src->top(); ++d) {
        IntMatrix m(dst->dim(d), src->dim(d));
        std::unordered_map<std::string, int> where;
        for (int i = 0; i < dst->dim(d); ++i) where[dst->labels(d)[i]] = i;
        for (int j = 0; j < src->dim(d); ++j) {
            auto it = where.find(src->labels(d)[j]);
            if (it == where.end())
                throw InvariantViolation("inclusion_by_labels: source label missing in target: " +
                                         src->labels(d)[j]);
            m.set(it->second, j, 1);
        }
        comp.push_back(std::move(m));
    }
    return ChainMap::create(std::move(src), std::move(dst), std::move(comp));
}

} // namespace confhom
