#pragma once

#include <memory>
#include <vector>

#include "gpcalc/graph.hpp"
#include "gpcalc/vertex_group.hpp"

namespace gpcalc {

/// A graph together with one vertex group per vertex.
class GraphProduct {
 public:
  GraphProduct() = default;
  /// Throws DomainError(Precondition) if the sizes disagree.
  GraphProduct(SimplicialGraph graph, std::vector<VertexGroupSpec> groups);

  SimplicialGraph const& graph() const { return graph_; }
  std::vector<VertexGroupSpec> const& groups() const { return groups_; }
  VertexGroupSpec const& group(VertexId v) const { return groups_.at(v); }
  std::size_t size() const { return graph_.size(); }

  VertexSet torsion_vertices() const;
  bool is_torsion_free(VertexSet xs) const {
    return !xs.intersects(torsion_vertices());
  }

  /// The graph product over the full subgraph on `xs`, vertices renumbered
  /// in increasing id order.
  GraphProduct full_subgroup(VertexSet xs) const;

  bool operator==(GraphProduct const&) const = default;

 private:
  SimplicialGraph graph_;
  std::vector<VertexGroupSpec> groups_;
};

/// Words and normal forms share their graph product by pointer.
using Ambient = std::shared_ptr<GraphProduct const>;

inline Ambient make_ambient(GraphProduct gp) {
  return std::make_shared<GraphProduct const>(std::move(gp));
}

bool same_ambient(Ambient const& a, Ambient const& b);

}  // namespace gpcalc
