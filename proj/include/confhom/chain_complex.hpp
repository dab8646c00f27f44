#pragma once

#include <memory>
#include <string>
#include <vector>

#include "confhom/int_matrix.hpp"

namespace confhom {

// Chain complex of free Z-modules in degrees 0..top(), with labelled bases.
// boundary[d] maps degree d to degree d-1 and has shape dim(d-1) x dim(d);
// boundary[0] has zero rows. The identity boundary-of-boundary = 0 is checked
// on construction.
class ChainComplex {
  public:
    ChainComplex(std::vector<std::vector<std::string>> labels, std::vector<IntMatrix> boundary);

    int top() const { return static_cast<int>(labels_.size()) - 1; }
    int dim(int d) const {
        return (d >= 0 && d <= top()) ? static_cast<int>(labels_[d].size()) : 0;
    }
    long total_cells() const;

    const std::vector<std::string>& labels(int d) const {
        if (d < 0 || d > top()) throw InvariantViolation("labels: degree out of range");
        return labels_[d];
    }
    const IntMatrix& boundary(int d) const { return boundary_[d]; }

    // boundary(d) for any d, with zero matrices of the right shape outside
    // the populated range.
    IntMatrix boundary_or_zero(int d) const {
        if (d >= 0 && d <= top()) return boundary_[d];
        return IntMatrix(dim(d - 1), dim(d));
    }

    int index_of(int d, const std::string& label) const;  // -1 when absent

  private:
    std::vector<std::vector<std::string>> labels_;
    std::vector<IntMatrix> boundary_;
};

using ComplexPtr = std::shared_ptr<const ChainComplex>;

ComplexPtr make_complex(std::vector<std::vector<std::string>> labels,
                        std::vector<IntMatrix> boundary);

// Degree-preserving-up-to-shift map of chain complexes: degree d of the
// source lands in degree d + shift of the target. Commutation with the
// boundaries (no sign) is checked by create(); every map the engine builds
// has shift 0, suspensions being materialized explicitly.
class ChainMap {
  public:
    ChainMap() = default;  // empty shell, assign before use

    static ChainMap create(ComplexPtr src, ComplexPtr dst, std::vector<IntMatrix> comp,
                           int shift = 0, bool verify = true);
    static ChainMap identity(ComplexPtr c);
    static ChainMap zero(ComplexPtr src, ComplexPtr dst, int shift = 0);

    const ComplexPtr& source() const { return src_; }
    const ComplexPtr& target() const { return dst_; }
    int shift() const { return shift_; }

    // Component in source degree d, zero-shaped outside the stored range.
    IntMatrix component(int d) const;

    IntVec apply(int d, const IntVec& x) const { return component(d) * x; }

    bool commutes() const;

    ChainMap compose_after(const ChainMap& inner) const;  // this after inner
    ChainMap operator+(const ChainMap& o) const;
    ChainMap operator-(const ChainMap& o) const;
    ChainMap operator-() const;
    bool equal(const ChainMap& o) const;

  private:
    ComplexPtr src_, dst_;
    int shift_ = 0;
    std::vector<IntMatrix> comp_;
};

// Degree shift by one: (SA)_d = A_{d-1}, with negated boundary.
ComplexPtr suspension(const ComplexPtr& a);

struct MappingCone {
    ComplexPtr cone;        // Cone_d = B_d + A_{d-1}, blocks in that order
    ComplexPtr suspended;   // SA
    ChainMap inclusion;     // B -> Cone, b |-> (b, 0)
    ChainMap projection;    // Cone -> SA, (b, a) |-> a
};

// Cone of f : A -> B; f must have shift 0.
MappingCone mapping_cone(const ChainMap& f);

struct DirectSum {
    ComplexPtr total;
    std::vector<ChainMap> inclusions;
    std::vector<ChainMap> projections;
};

// Degreewise direct sum; block k's labels are prefixed with prefixes[k]
// (defaults to "k:") to keep labels unique.
DirectSum direct_sum(const std::vector<ComplexPtr>& parts,
                     const std::vector<std::string>& prefixes = {});

// Inclusion determined by matching labels: every source label must appear in
// the target in the same degree; entries are +1. Verified as a chain map.
ChainMap inclusion_by_labels(ComplexPtr src, ComplexPtr dst);

} // namespace confhom
