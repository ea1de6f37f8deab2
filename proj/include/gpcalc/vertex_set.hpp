#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gpcalc {

using VertexId = std::uint32_t;

/// Graphs are capped at this many vertices so that a vertex subset fits in
/// one machine word.
inline constexpr std::size_t kMaxVertices = 64;

/// A subset of the vertices of a graph, as a bitmask over vertex ids.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<VertexId> ids) {
    for (auto id : ids) insert(id);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet first(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool contains(VertexId v) const { return (bits_ >> v) & 1u; }
  constexpr void insert(VertexId v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(VertexId v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Smallest member; undefined on the empty set.
  constexpr VertexId least() const {
    return static_cast<VertexId>(std::countr_zero(bits_));
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(VertexSet const&) const = default;

  std::vector<VertexId> members() const {
    std::vector<VertexId> out;
    for (auto b = bits_; b != 0; b &= b - 1)
      out.push_back(static_cast<VertexId>(std::countr_zero(b)));
    return out;
  }

  /// Ordering used for every sorted list of vertex sets: by size, then
  /// lexicographically on the increasing member sequence.
  static bool size_lex_less(VertexSet x, VertexSet y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.members() < y.members();
  }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace gpcalc
