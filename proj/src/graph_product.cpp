#include "gpcalc/graph_product.hpp"

#include "gpcalc/errors.hpp"

namespace gpcalc {

GraphProduct::GraphProduct(SimplicialGraph graph,
                           std::vector<VertexGroupSpec> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (graph_.size() != groups_.size())
    throw DomainError(ErrorKind::Precondition,
                      "every vertex needs exactly one vertex group");
}

VertexSet GraphProduct::torsion_vertices() const {
  VertexSet out;
  for (VertexId v = 0; v < groups_.size(); ++v)
    if (!groups_[v].is_torsion_free()) out.insert(v);
  return out;
}

GraphProduct GraphProduct::full_subgroup(VertexSet xs) const {
  std::vector<VertexGroupSpec> groups;
  for (auto v : xs.members()) groups.push_back(group(v));
  return GraphProduct(graph_.induced(xs), std::move(groups));
}

bool same_ambient(Ambient const& a, Ambient const& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace gpcalc
