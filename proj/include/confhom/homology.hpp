#pragma once

#include <map>
#include <memory>
#include <optional>

#include "confhom/abelian.hpp"
#include "confhom/morse.hpp"

namespace confhom {

// Homology of a chain complex: canonical groups, generator lifts, and
// expression of cycle classes in canonical coordinates. Complexes above the
// cell threshold are compressed by morse_reduce first; the transport maps
// keep lifts and expressions in the original basis, exactly.
class HomologyEngine {
  public:
    explicit HomologyEngine(ComplexPtr c, long morse_threshold = 600);

    const ComplexPtr& complex() const { return orig_; }
    int top() const { return orig_->top(); }

    const FGAbGroup& group(int d);

    // Chain in original degree-d coordinates representing generator k.
    IntVec generator_chain(int d, int k);

    // Canonical coordinates of the class of a degree-d cycle.
    IntVec express(int d, const IntVec& cycle);

  private:
    struct Degree {
        IntMatrix K;  // saturated cycle basis
        std::unique_ptr<LatticeSolver> solver;
        FGAbGroup H;
    };
    Degree& at(int d);

    ComplexPtr orig_, work_;
    std::optional<ChainMap> I_, P_;  // present when the complex was reduced
    std::map<int, Degree> cache_;
};

// Map induced on homology by a chain map, from degree d of the source to
// degree d + shift of the target.
GroupMap induced_map(const ChainMap& f, HomologyEngine& src, HomologyEngine& dst, int d);

} // namespace confhom
