#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gpcalc/vertex_set.hpp"

namespace gpcalc {

/// Finite simplicial graph. Vertices are named and kept in declaration
/// order; that order breaks every tie downstream.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;

  /// Throws DomainError(Precondition) on a duplicate name or when the graph
  /// is full.
  VertexId add_vertex(std::string name);

  /// Throws on loops, duplicates and out-of-range ids.
  void add_edge(VertexId u, VertexId v);

  std::size_t size() const { return names_.size(); }
  VertexSet vertices() const { return VertexSet::first(size()); }

  std::string const& name(VertexId v) const { return names_.at(v); }
  std::vector<std::string> const& names() const { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  /// Throws DomainError(UnknownVertex).
  VertexId id(std::string_view name) const;

  bool adjacent(VertexId u, VertexId v) const { return adj_[u].contains(v); }
  VertexSet link(VertexId v) const;
  VertexSet star(VertexId v) const { return link(v) | VertexSet{v}; }
  /// Intersection of the stars of the members of `xs`; all vertices when
  /// `xs` is empty.
  VertexSet star(VertexSet xs) const;

  /// Edges as pairs (u, v) with u < v, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;
  std::size_t edge_count() const;
  bool is_complete() const;

  /// Full subgraph on `xs`; vertices renumbered in increasing id order.
  SimplicialGraph induced(VertexSet xs) const;

  bool operator==(SimplicialGraph const&) const = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
};

SimplicialGraph complement(SimplicialGraph const& g);

/// Connected components of the full subgraph on `within`, each sorted list
/// ordered by least vertex.
std::vector<VertexSet> connected_components(SimplicialGraph const& g,
                                            VertexSet within);

/// Removing `c` leaves at least two connected components.
bool is_separating(SimplicialGraph const& g, VertexSet c);

/// All inclusion-minimal separating sets, sorted by size then
/// lexicographically. Empty iff `g` is complete; equal to {∅} iff `g` is
/// disconnected. Exhaustive over subsets, so `g` must have at most
/// kMaxSeparatorSearch vertices.
std::vector<VertexSet> separating_sets(SimplicialGraph const& g);

inline constexpr std::size_t kMaxSeparatorSearch = 20;

/// link(v) separates whenever v is not adjacent to every other vertex.
std::optional<VertexSet> link_separator(SimplicialGraph const& g, VertexId v);

struct IrreducibleDecomposition {
  std::vector<VertexSet> components;
};

/// Components of the complement of the full subgraph on `within`, sorted by
/// least vertex.
IrreducibleDecomposition irreducible_decomposition(SimplicialGraph const& g,
                                                   VertexSet within);
IrreducibleDecomposition irreducible_decomposition(SimplicialGraph const& g);

/// "{u,w}" using vertex names, members in id order.
std::string format_vertex_set(SimplicialGraph const& g, VertexSet xs);

}  // namespace gpcalc
