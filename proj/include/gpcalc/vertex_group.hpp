#pragma once

#include <optional>
#include <string>

#include "gpcalc/integer.hpp"
#include "gpcalc/vertex_set.hpp"

namespace gpcalc {

/// The group sitting at one vertex: Z or Z/n.
///
/// Everything downstream talks to a vertex group through the syllable
/// operations declared below (multiply, invert, identity test, order and
/// primitive root). Another torsion-free group with unique roots and
/// primitive stability can be supported by giving it those five operations;
/// the word, amalgam and root engines never inspect the group kind.
class VertexGroupSpec {
 public:
  enum class Kind { InfiniteCyclic, FiniteCyclic };

  static VertexGroupSpec infinite_cyclic() { return VertexGroupSpec(); }
  /// Throws DomainError(Precondition) unless n >= 2.
  static VertexGroupSpec finite_cyclic(Integer n);

  Kind kind() const { return kind_; }
  bool is_torsion_free() const { return kind_ == Kind::InfiniteCyclic; }
  /// Group order; nullopt for Z.
  std::optional<Integer> order() const;

  /// Canonical exponent: unchanged over Z, reduced into [0, n) over Z/n.
  Integer normalize(Integer const& exponent) const;
  bool is_identity(Integer const& exponent) const;

  /// "Z" or "Z/n"
  std::string to_string() const;

  bool operator==(VertexGroupSpec const&) const = default;

 private:
  VertexGroupSpec() = default;

  Kind kind_ = Kind::InfiniteCyclic;
  Integer modulus_ = 0;
};

/// A nontrivial element of a vertex group. Finite-cyclic exponents are kept
/// in 1..n-1.
struct Syllable {
  VertexId vertex = 0;
  Integer exponent;

  bool operator==(Syllable const&) const = default;
};

/// Product of two syllables at the same vertex; nullopt when it is the
/// identity. Throws DomainError(VertexMismatch).
std::optional<Syllable> syl_mul(VertexGroupSpec const& group, Syllable const& a,
                                Syllable const& b);

Syllable syl_inverse(VertexGroupSpec const& group, Syllable const& a);

std::optional<Syllable> syl_power(VertexGroupSpec const& group,
                                  Syllable const& a, Integer const& n);

/// Builds a syllable from a raw exponent, or nullopt for the identity.
std::optional<Syllable> make_syllable(VertexGroupSpec const& group,
                                      VertexId vertex, Integer const& exponent);

struct SyllableRoot {
  Syllable root;
  Integer plog;
};

/// Over Z the primitive root of v^k is v^sign(k) with logarithm |k|.
/// Throws DomainError(TorsionVertex) for Z/n: torsion has no primitive root.
SyllableRoot syl_plog(VertexGroupSpec const& group, Syllable const& a);

}  // namespace gpcalc
