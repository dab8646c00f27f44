#pragma once

#include <string>

#include "confhom/snf.hpp"

namespace confhom {

// Finitely generated abelian group with a chosen generating set lifted to an
// ambient lattice Z^m. Canonical form: torsion orders t1 | t2 | ... (each at
// least 2) followed by free_rank copies of Z. Generator order: torsion
// generators first, then free generators.
struct FGAbGroup {
    IntVec torsion;
    int free_rank = 0;
    IntMatrix gens;        // m x ngens, generator lifts in ambient coordinates
    IntMatrix coord_rows;  // ngens x m, ambient vector -> raw coordinates

    int ambient_dim() const { return gens.rows(); }
    int ntorsion() const { return static_cast<int>(torsion.size()); }
    int ngens() const { return ntorsion() + free_rank; }
    bool trivial() const { return ngens() == 0; }

    bool same_type(const FGAbGroup& o) const {
        return torsion == o.torsion && free_rank == o.free_rank;
    }

    // Torsion coordinates reduced into [0, t_i); free coordinates untouched.
    IntVec reduce(IntVec raw) const;

    // Canonical coordinates of an ambient lattice vector. Only meaningful on
    // vectors the group was presented over.
    IntVec coords(const IntVec& ambient) const { return reduce(coord_rows * ambient); }

    // Relations of the coordinate lattice: one column t_i * e_i per torsion
    // generator. Shape ngens x ntorsion.
    IntMatrix relation_columns() const;

    // "0", "Z", "Z^2 + Z/2 + Z/6", ...
    std::string render() const;
};

// The group Z^rows(relations) modulo the column span of `relations`.
FGAbGroup group_from_presentation(const IntMatrix& relations);

// Homomorphism between presented groups. Column j of the matrix holds the
// canonical target coordinates of the image of source generator j. Checked
// for well-definedness on construction.
class GroupMap {
  public:
    GroupMap(FGAbGroup src, FGAbGroup dst, IntMatrix M);

    static GroupMap identity(const FGAbGroup& g);
    static GroupMap zero(const FGAbGroup& src, const FGAbGroup& dst);

    const FGAbGroup& source() const { return src_; }
    const FGAbGroup& target() const { return dst_; }
    const IntMatrix& matrix() const { return M_; }

    IntVec apply(const IntVec& source_coords) const;

    // this ∘ inner, requires inner.target type == this->source type.
    GroupMap compose_after(const GroupMap& inner) const;

    bool is_zero() const { return M_.is_zero(); }
    bool equal(const GroupMap& o) const;

    bool is_iso() const;
    GroupMap inverse() const;  // requires is_iso(); verified on construction

  private:
    FGAbGroup src_, dst_;
    IntMatrix M_;
};

// Exactness of A --f--> B --g--> C at B, decided on preimage lattices in the
// coordinate lattice of B.
struct ExactnessReport {
    bool composite_zero = true;
    bool image_in_kernel = true;
    bool kernel_in_image = true;
    std::string witness;  // empty when exact

    bool exact() const { return composite_zero && image_in_kernel && kernel_in_image; }
};

ExactnessReport check_exact(const GroupMap& f, const GroupMap& g);

} // namespace confhom
