#include "gpcalc/cyclic.hpp"

namespace gpcalc {
namespace {

/// Position of a syllable that can be shuffled to the end and shares its
/// vertex with a different syllable that can be shuffled to the front, if
/// any. Such a pair joins in some cyclic permutation of some reduced word.
std::optional<std::size_t> joinable_end(NormalForm const& g) {
  auto const& graph = g.ambient()->graph();
  auto const& word = g.syllables();
  auto const n = word.size();
  std::vector<std::size_t> front_position(g.ambient()->size(), n);
  VertexSet before;
  for (std::size_t i = 0; i < n; ++i) {
    VertexId v = word[i].vertex;
    if (before.is_subset_of(graph.link(v))) front_position[v] = i;
    before.insert(v);
  }
  VertexSet after;
  for (std::size_t j = n; j-- > 0;) {
    VertexId v = word[j].vertex;
    if (after.is_subset_of(graph.link(v)) && front_position[v] != n &&
        front_position[v] != j)
      return j;
    after.insert(v);
  }
  return std::nullopt;
}

}  // namespace

bool is_cyclically_reduced(NormalForm const& g) {
  auto const& word = g.syllables();
  std::vector<Syllable> rotation;
  for (std::size_t i = 1; i < word.size(); ++i) {
    rotation.assign(word.begin() + static_cast<std::ptrdiff_t>(i), word.end());
    rotation.insert(rotation.end(), word.begin(),
                    word.begin() + static_cast<std::ptrdiff_t>(i));
    if (!is_reduced(*g.ambient(), rotation)) return false;
  }
  return true;
}

CyclicReduction cyclically_reduce(NormalForm const& g) {
  NormalForm conjugator = NormalForm::identity(g.ambient());
  NormalForm core = g;
  // Each step conjugates by the trailing syllable of the joinable pair, so
  // |core| strictly decreases.
  while (auto j = joinable_end(core)) {
    NormalForm last = reduce(core.ambient(), {core.syllables()[*j]});
    core = last * core * inverse(last);
    conjugator = conjugator * inverse(last);
  }
  return {std::move(conjugator), std::move(core)};
}

VertexSet essential_support(NormalForm const& g) {
  return support(cyclically_reduce(g).core);
}

}  // namespace gpcalc
