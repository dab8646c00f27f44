#include "confhom/abelian.hpp"

#include <sstream>

namespace confhom {

IntVec FGAbGroup::reduce(IntVec raw) const {
    if (static_cast<int>(raw.size()) != ngens())
        throw InvariantViolation("coordinate vector length mismatch");
    for (int i = 0; i < ntorsion(); ++i) raw[i] = int_mod(raw[i], torsion[i]);
    return raw;
}

IntMatrix FGAbGroup::relation_columns() const {
    IntMatrix r(ngens(), ntorsion());
    for (int i = 0; i < ntorsion(); ++i) r.set(i, i, torsion[i]);
    return r;
}

std::string FGAbGroup::render() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank == 1) {
        os << "Z";
        first = false;
    } else if (free_rank > 1) {
        os << "Z^" << free_rank;
        first = false;
    }
    for (const auto& t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

FGAbGroup group_from_presentation(const IntMatrix& relations) {
    const int m = relations.rows();
    SNFResult s = snf(relations);
    std::vector<int> idx;
    FGAbGroup g;
    for (int i = 0; i < s.rank; ++i) {
        if (s.diag[i] >= 2) {
            idx.push_back(i);
            g.torsion.push_back(s.diag[i]);
        }
    }
    for (int i = s.rank; i < m; ++i) idx.push_back(i);
    g.free_rank = m - s.rank;
    g.gens = s.Uinv.select_columns(idx);
    g.coord_rows = s.U.select_rows(idx);
    return g;
}

GroupMap::GroupMap(FGAbGroup src, FGAbGroup dst, IntMatrix M)
    : src_(std::move(src)), dst_(std::move(dst)), M_(std::move(M)) {
    if (M_.rows() != dst_.ngens() || M_.cols() != src_.ngens())
        throw InvariantViolation("group map matrix shape mismatch");
    // Well-definedness: the order of each source torsion generator must kill
    // its image.
    for (int j = 0; j < src_.ntorsion(); ++j) {
        const Int& o = src_.torsion[j];
        for (int i = 0; i < dst_.ngens(); ++i) {
            Int v = o * M_.get(i, j);
            if (i < dst_.ntorsion() ? !divides(dst_.torsion[i], v) : v != 0)
                throw InvariantViolation("group map not well defined on torsion");
        }
    }
    // Canonical form: torsion rows reduced mod their order.
    for (int i = 0; i < dst_.ntorsion(); ++i)
        for (int j = 0; j < M_.cols(); ++j) M_.set(i, j, int_mod(M_.get(i, j), dst_.torsion[i]));
}

GroupMap GroupMap::identity(const FGAbGroup& g) {
    return GroupMap(g, g, IntMatrix::identity(g.ngens()));
}

GroupMap GroupMap::zero(const FGAbGroup& src, const FGAbGroup& dst) {
    return GroupMap(src, dst, IntMatrix(dst.ngens(), src.ngens()));
}

IntVec GroupMap::apply(const IntVec& source_coords) const {
    return dst_.reduce(M_ * source_coords);
}

GroupMap GroupMap::compose_after(const GroupMap& inner) const {
    if (!inner.target().same_type(src_))
        throw InvariantViolation("group map composition type mismatch");
    return GroupMap(inner.source(), dst_, M_ * inner.matrix());
}

bool GroupMap::equal(const GroupMap& o) const {
    return src_.same_type(o.src_) && dst_.same_type(o.dst_) && M_ == o.M_;
}

bool GroupMap::is_iso() const {
    if (!src_.same_type(dst_)) return false;
    // Surjectivity: trivial cokernel. Between groups of the same type that
    // already forces bijectivity.
    FGAbGroup coker = group_from_presentation(IntMatrix::hstack(M_, dst_.relation_columns()));
    return coker.trivial();
}

GroupMap GroupMap::inverse() const {
    if (!is_iso()) throw InvariantViolation("inverse of a non-isomorphism");
    LatticeSolver solver(IntMatrix::hstack(M_, dst_.relation_columns()));
    IntMatrix X(src_.ngens(), dst_.ngens());
    for (int j = 0; j < dst_.ngens(); ++j) {
        IntVec e(dst_.ngens(), Int(0));
        e[j] = 1;
        auto sol = solver.solve(e);
        if (!sol) throw InvariantViolation("iso has no preimage for a generator");
        for (int i = 0; i < src_.ngens(); ++i) X.set(i, j, (*sol)[i]);
    }
    GroupMap inv(dst_, src_, X);
    if (!compose_after(inv).equal(identity(dst_)) || !inv.compose_after(*this).equal(identity(src_)))
        throw InvariantViolation("inverse verification failed");
    return inv;
}

ExactnessReport check_exact(const GroupMap& f, const GroupMap& g) {
    if (!f.target().same_type(g.source()))
        throw InvariantViolation("check_exact: middle group mismatch");
    ExactnessReport rep;
    const FGAbGroup& B = g.source();
    const FGAbGroup& C = g.target();

    GroupMap comp = g.compose_after(f);
    rep.composite_zero = comp.is_zero();
    if (!rep.composite_zero) rep.witness = "composite of the two maps is nonzero";

    // Preimage lattices inside the coordinate lattice of B.
    IntMatrix Lf = IntMatrix::hstack(f.matrix(), B.relation_columns());
    IntMatrix K = kernel_basis(IntMatrix::hstack(g.matrix(), C.relation_columns()));
    std::vector<int> top(B.ngens());
    for (int i = 0; i < B.ngens(); ++i) top[i] = i;
    IntMatrix Lk = K.select_rows(top);

    LatticeSolver in_kernel(Lk), in_image(Lf);
    for (int j = 0; j < Lf.cols() && rep.image_in_kernel; ++j) {
        if (!in_kernel.solve(Lf.column(j))) {
            rep.image_in_kernel = false;
            rep.witness = "image generator " + std::to_string(j) + " not in kernel lattice";
        }
    }
    for (int j = 0; j < Lk.cols() && rep.kernel_in_image; ++j) {
        if (!in_image.solve(Lk.column(j))) {
            rep.kernel_in_image = false;
            rep.witness = "kernel generator " + std::to_string(j) + " not in image lattice";
        }
    }
    return rep;
}

} // namespace confhom
