#pragma once

#include "gorelab/representation.hpp"

namespace gorelab {

/// Vector-space dual: a representation over the opposite algebra with every
/// arrow matrix transposed onto the reversed arrow.
Representation dual_D(const Representation& m);

/// D of the left regular module, the injective cogenerator as a right module.
Representation dual_regular(const AlgebraPtr& a);

/// Row i holds the opposite-algebra coordinates of the reversed basis path i.
Mat reversal_matrix(const Algebra& a);

/// Auslander-Reiten transpose over the opposite algebra, from a minimal presentation.
Representation transpose_Tr(const Representation& m);
/// D Tr, over the same algebra as m.
Representation tau(const Representation& m);

}  // namespace gorelab
