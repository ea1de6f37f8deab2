#pragma once

#include <vector>

#include "gpcalc/word.hpp"

namespace gpcalc {

/// g = s(g) p(g) as a reduced product, where S(g) = supp(g) ∩ star(supp(g))
/// and P(g) = supp(g) \ S(g).
struct PSDecomposition {
  VertexSet s_vertices;
  VertexSet p_vertices;
  NormalForm s;
  NormalForm p;
};

PSDecomposition ps_decompose(NormalForm const& g);

struct IrreducibleFactor {
  VertexSet vertices;
  NormalForm element;
};

/// Factors over the irreducible components of the full subgraph on
/// supp(g), sorted by least vertex. The factors pairwise commute and their
/// product is g. The identity has no factors.
struct IrreducibleFactorization {
  std::vector<IrreducibleFactor> factors;
};

IrreducibleFactorization irreducible_factorize(NormalForm const& g);

/// Nontrivial with a single irreducible factor.
bool is_irreducible(NormalForm const& g);

/// Checks |g^n| == |n| * |g| by direct multiplication. Requires g
/// irreducible, cyclically reduced and |g| > 1; throws
/// DomainError(Precondition) otherwise.
bool power_length_check(NormalForm const& g, Integer const& n);

}  // namespace gpcalc
