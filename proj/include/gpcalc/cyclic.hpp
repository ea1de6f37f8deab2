#pragma once

#include "gpcalc/word.hpp"

namespace gpcalc {

/// Every rotation of the syllable sequence is a reduced word.
bool is_cyclically_reduced(NormalForm const& g);

/// g == conjugator * core * conjugator^-1 with `core` cyclically reduced;
/// |core| is minimal in the conjugacy class of g.
struct CyclicReduction {
  NormalForm conjugator;
  NormalForm core;
};

CyclicReduction cyclically_reduce(NormalForm const& g);

/// Support of a cyclically reduced conjugate; a conjugacy invariant.
VertexSet essential_support(NormalForm const& g);

}  // namespace gpcalc
