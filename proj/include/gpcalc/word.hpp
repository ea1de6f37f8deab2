#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gpcalc/graph_product.hpp"

namespace gpcalc {

/// One entry of an input word. Unlike a Syllable the exponent may represent
/// the identity (x^2 over Z/2, or v^0); reduction drops such letters.
struct Letter {
  VertexId vertex = 0;
  Integer exponent;

  bool operator==(Letter const&) const = default;
};

class NormalForm;

/// An arbitrary word over a graph product.
class Word {
 public:
  /// Throws DomainError(UnknownVertex) if a letter names a vertex outside
  /// the ambient graph.
  Word(Ambient ambient, std::vector<Letter> letters);
  Word(NormalForm const& nf);  // NOLINT: normal forms are words

  Ambient const& ambient() const { return ambient_; }
  std::vector<Letter> const& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

 private:
  Ambient ambient_;
  std::vector<Letter> letters_;
};

/// The canonical reduced word of a group element: reduced (no identity
/// syllable, no two syllables joinable) and lexicographically least, under
/// vertex order, among the reduced words of its shuffle class. Equal
/// elements therefore have identical syllable sequences.
class NormalForm {
 public:
  static NormalForm identity(Ambient ambient);

  Ambient const& ambient() const { return ambient_; }
  std::vector<Syllable> const& syllables() const { return syllables_; }
  std::size_t length() const { return syllables_.size(); }
  bool is_identity() const { return syllables_.empty(); }

  /// Same ambient and identical sequence.
  bool operator==(NormalForm const& other) const;

 private:
  friend NormalForm reduce(Ambient const&, std::vector<Syllable>);
  friend NormalForm reduce(Word const&);
  friend NormalForm operator*(NormalForm const&, NormalForm const&);
  friend NormalForm inverse(NormalForm const&);

  NormalForm(Ambient ambient, std::vector<Syllable> syllables)
      : ambient_(std::move(ambient)), syllables_(std::move(syllables)) {}

  Ambient ambient_;
  std::vector<Syllable> syllables_;
};

/// T1/T2 to a reduced word (joining each incoming syllable with the nearest
/// earlier syllable of its vertex across a commuting interval), then the
/// lexicographic canonical shuffle.
NormalForm reduce(Word const& w);
NormalForm reduce(Ambient const& ambient, std::vector<Syllable> syllables);

/// Throws DomainError(AmbientMismatch).
bool equal(Word const& x, Word const& y);

VertexSet support(NormalForm const& g);

struct FirstLast {
  VertexSet first;
  VertexSet last;
};

/// FL(g) and LL(g): vertices whose syllable can be shuffled to the front
/// (resp. back) of a reduced word for g.
FirstLast first_last(NormalForm const& g);

/// rho_X: delete syllables outside X and reduce.
NormalForm retract(NormalForm const& g, VertexSet xs);

/// |xy| == |x| + |y|. Cross-checked against LL(x) ∩ FL(y) == ∅.
bool reduced_product(NormalForm const& x, NormalForm const& y);

NormalForm operator*(NormalForm const& x, NormalForm const& y);
NormalForm inverse(NormalForm const& g);
NormalForm power(NormalForm const& g, Integer n);
/// c g c^-1
NormalForm conjugate(NormalForm const& c, NormalForm const& g);

/// True iff no syllable is the identity and no two syllables can be joined.
bool is_reduced(GraphProduct const& gp, std::span<Syllable const> syllables);

/// Whitespace-separated `name` or `name^exp` items; `( ... )^exp` groups
/// are accepted as shorthand for repeated or inverted subwords. Empty text
/// is the identity. Throws SyntaxError, or DomainError(UnknownVertex).
Word parse_word(Ambient const& ambient, std::string_view text);
NormalForm parse_element(Ambient const& ambient, std::string_view text);

std::string to_string(GraphProduct const& gp, Syllable const& s);
/// Space-separated syllables; the identity formats as the empty string.
std::string to_string(NormalForm const& g);
std::string to_string(Word const& w);

}  // namespace gpcalc
