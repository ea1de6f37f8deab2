#include "gpcalc/graph.hpp"

#include <algorithm>
#include <deque>

#include "gpcalc/errors.hpp"

namespace gpcalc {

VertexId SimplicialGraph::add_vertex(std::string name) {
  if (find(name))
    throw DomainError(ErrorKind::Precondition, "duplicate vertex " + name);
  if (names_.size() == kMaxVertices)
    throw DomainError(ErrorKind::Precondition,
                      "graphs are limited to 64 vertices");
  names_.push_back(std::move(name));
  adj_.emplace_back();
  return static_cast<VertexId>(names_.size() - 1);
}

void SimplicialGraph::check_vertex(VertexId v) const {
  if (v >= names_.size())
    throw DomainError(ErrorKind::UnknownVertex,
                      "unknown vertex id " + std::to_string(v));
}

void SimplicialGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw DomainError(ErrorKind::Precondition, "loop at vertex " + names_[u]);
  if (adj_[u].contains(v))
    throw DomainError(ErrorKind::Precondition,
                      "duplicate edge " + names_[u] + " " + names_[v]);
  adj_[u].insert(v);
  adj_[v].insert(u);
}

std::optional<VertexId> SimplicialGraph::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId SimplicialGraph::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw DomainError(ErrorKind::UnknownVertex,
                    "unknown vertex " + std::string(name));
}

VertexSet SimplicialGraph::link(VertexId v) const {
  check_vertex(v);
  return adj_[v];
}

VertexSet SimplicialGraph::star(VertexSet xs) const {
  VertexSet out = vertices();
  for (auto v : xs.members()) out = out & star(v);
  return out;
}

std::vector<std::pair<VertexId, VertexId>> SimplicialGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < size(); ++u)
    for (auto v : adj_[u].members())
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::size_t SimplicialGraph::edge_count() const {
  std::size_t twice = 0;
  for (auto const& a : adj_) twice += a.size();
  return twice / 2;
}

bool SimplicialGraph::is_complete() const {
  auto n = size();
  return edge_count() == n * (n - 1) / 2;
}

SimplicialGraph SimplicialGraph::induced(VertexSet xs) const {
  SimplicialGraph sub;
  auto members = xs.members();
  for (auto v : members) {
    check_vertex(v);
    sub.add_vertex(names_[v]);
  }
  for (VertexId i = 0; i < members.size(); ++i)
    for (VertexId j = i + 1; j < members.size(); ++j)
      if (adjacent(members[i], members[j])) sub.add_edge(i, j);
  return sub;
}

SimplicialGraph complement(SimplicialGraph const& g) {
  SimplicialGraph out;
  for (auto const& name : g.names()) out.add_vertex(name);
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::vector<VertexSet> connected_components(SimplicialGraph const& g,
                                            VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet unseen = within & g.vertices();
  while (!unseen.empty()) {
    VertexId start = unseen.least();
    VertexSet component{start};
    unseen.erase(start);
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (auto v : (g.link(u) & unseen).members()) {
        unseen.erase(v);
        component.insert(v);
        queue.push_back(v);
      }
    }
    out.push_back(component);
  }
  return out;
}

bool is_separating(SimplicialGraph const& g, VertexSet c) {
  return connected_components(g, g.vertices() - c).size() >= 2;
}

std::vector<VertexSet> separating_sets(SimplicialGraph const& g) {
  auto const n = g.size();
  if (n > kMaxSeparatorSearch)
    throw DomainError(ErrorKind::Precondition,
                      "separating set search is limited to 20 vertices");
  std::vector<VertexSet> found;
  // Removing n-1 or more vertices leaves at most one component.
  for (std::size_t size = 0; size + 2 <= n; ++size) {
    std::vector<VertexSet> level;
    // Gosper's hack over all n-bit masks with `size` bits set.
    std::uint64_t const limit = std::uint64_t{1} << n;
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (mask < limit) {
      VertexSet candidate(mask);
      bool has_smaller = std::any_of(found.begin(), found.end(), [&](VertexSet s) {
        return s.is_subset_of(candidate);
      });
      if (!has_smaller && is_separating(g, candidate)) level.push_back(candidate);
      if (mask == 0) break;
      std::uint64_t low = mask & -mask;
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
    std::sort(level.begin(), level.end(), VertexSet::size_lex_less);
    found.insert(found.end(), level.begin(), level.end());
  }
  return found;
}

std::optional<VertexSet> link_separator(SimplicialGraph const& g, VertexId v) {
  auto link = g.link(v);
  if (link == g.vertices() - VertexSet{v}) return std::nullopt;
  return link;
}

IrreducibleDecomposition irreducible_decomposition(SimplicialGraph const& g,
                                                   VertexSet within) {
  // Connected components of the complement graph, walked without building it.
  IrreducibleDecomposition out;
  VertexSet unseen = within & g.vertices();
  while (!unseen.empty()) {
    VertexId start = unseen.least();
    VertexSet component{start};
    unseen.erase(start);
    std::deque<VertexId> queue{start};
    while (!queue.empty()) {
      VertexId u = queue.front();
      queue.pop_front();
      for (auto v : (unseen - g.link(u)).members()) {
        unseen.erase(v);
        component.insert(v);
        queue.push_back(v);
      }
    }
    out.components.push_back(component);
  }
  return out;
}

IrreducibleDecomposition irreducible_decomposition(SimplicialGraph const& g) {
  return irreducible_decomposition(g, g.vertices());
}

std::string format_vertex_set(SimplicialGraph const& g, VertexSet xs) {
  std::string out = "{";
  bool first = true;
  for (auto v : xs.members()) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

}  // namespace gpcalc
