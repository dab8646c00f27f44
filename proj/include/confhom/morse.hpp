#pragma once

#include "confhom/chain_complex.hpp"

namespace confhom {

// Algebraic reduction of a chain complex by iterated cancellation of
// incidence-±1 pairs, together with the two transport maps. Both are honest
// chain maps and P after I is the identity of the reduced complex, so
// homology classes, generator lifts, and expressions move back and forth
// exactly.
struct MorseReduction {
    ComplexPtr reduced;
    ChainMap I;  // reduced -> original
    ChainMap P;  // original -> reduced
};

MorseReduction morse_reduce(const ComplexPtr& c);

} // namespace confhom
