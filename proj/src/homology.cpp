#include "confhom/homology.hpp"

namespace confhom {

HomologyEngine::HomologyEngine(ComplexPtr c, long morse_threshold) : orig_(std::move(c)) {
    if (orig_->total_cells() > morse_threshold) {
        MorseReduction red = morse_reduce(orig_);
        work_ = red.reduced;
        I_ = std::move(red.I);
        P_ = std::move(red.P);
    } else {
        work_ = orig_;
    }
}

HomologyEngine::Degree& HomologyEngine::at(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;

    Degree deg;
    deg.K = kernel_basis(work_->boundary_or_zero(d));
    deg.solver = std::make_unique<LatticeSolver>(deg.K);
    IntMatrix img = work_->boundary_or_zero(d + 1);
    IntMatrix X(deg.K.cols(), img.cols());
    for (int j = 0; j < img.cols(); ++j) {
        auto a = deg.solver->solve(img.column(j));
        if (!a) throw InvariantViolation("boundary column is not a cycle");
        X.set_column(j, *a);
    }
    deg.H = group_from_presentation(X);
    return cache_.emplace(d, std::move(deg)).first->second;
}

const FGAbGroup& HomologyEngine::group(int d) { return at(d).H; }

IntVec HomologyEngine::generator_chain(int d, int k) {
    Degree& deg = at(d);
    if (k < 0 || k >= deg.H.ngens()) throw InvariantViolation("generator index out of range");
    IntVec chain = deg.K * deg.H.gens.column(k);
    if (I_) chain = I_->apply(d, chain);
    return chain;
}

IntVec HomologyEngine::express(int d, const IntVec& cycle) {
    if (!vec_is_zero(orig_->boundary_or_zero(d) * cycle))
        throw InvariantViolation("express called on a chain that is not a cycle");
    IntVec z = P_ ? P_->apply(d, cycle) : cycle;
    Degree& deg = at(d);
    auto a = deg.solver->solve(z);
    if (!a) throw InvariantViolation("cycle not in the saturated kernel lattice");
    return deg.H.coords(*a);
}

GroupMap induced_map(const ChainMap& f, HomologyEngine& src, HomologyEngine& dst, int d) {
    const FGAbGroup A = src.group(d);
    const FGAbGroup B = dst.group(d + f.shift());
    IntMatrix M(B.ngens(), A.ngens());
    for (int k = 0; k < A.ngens(); ++k) {
        IntVec z = src.generator_chain(d, k);
        IntVec w = f.apply(d, z);
        IntVec col = dst.express(d + f.shift(), w);
        for (int i = 0; i < B.ngens(); ++i) M.set(i, k, col[i]);
    }
    return GroupMap(A, B, std::move(M));
}

} // namespace confhom
