#include "gpcalc/factorization.hpp"

#include "gpcalc/cyclic.hpp"
#include "gpcalc/errors.hpp"

namespace gpcalc {

PSDecomposition ps_decompose(NormalForm const& g) {
  auto const& graph = g.ambient()->graph();
  VertexSet supp = support(g);
  VertexSet s_vertices = supp & graph.star(supp);
  VertexSet p_vertices = supp - s_vertices;
  return {s_vertices, p_vertices, retract(g, s_vertices), retract(g, p_vertices)};
}

IrreducibleFactorization irreducible_factorize(NormalForm const& g) {
  IrreducibleFactorization out;
  for (auto component :
       irreducible_decomposition(g.ambient()->graph(), support(g)).components)
    out.factors.push_back({component, retract(g, component)});
  return out;
}

bool is_irreducible(NormalForm const& g) {
  return !g.is_identity() && irreducible_factorize(g).factors.size() == 1;
}

bool power_length_check(NormalForm const& g, Integer const& n) {
  if (g.length() <= 1 || !is_irreducible(g) || !is_cyclically_reduced(g))
    throw DomainError(ErrorKind::Precondition,
                      "length law needs an irreducible cyclically reduced "
                      "element of length > 1");
  return Integer(power(g, n).length()) == abs(n) * g.length();
}

}  // namespace gpcalc
