#pragma once

#include <optional>
#include <vector>

#include "gpcalc/word.hpp"

namespace gpcalc {

/// G = G_A *_{G_C} G_B with C = A ∩ B separating A \ C from B \ C.
struct AmalgamSplitting {
  Ambient ambient;
  VertexSet a;
  VertexSet b;
  VertexSet c;
};

/// With an explicit separator: A is the component of Γ \ C containing the
/// least vertex, plus C. Without one, C is the first minimal separating set.
/// Throws DomainError(CompleteGraph) or DomainError(NotSeparating).
AmalgamSplitting split(Ambient const& ambient,
                       std::optional<VertexSet> separator = std::nullopt);

enum class Side { A, B };

char const* to_string(Side side);

/// A nontrivial element of ker(rho_C) restricted to G_A or G_B.
struct KernelFactor {
  Side side;
  NormalForm element;
};

/// g = k_1 ... k_m r, with the k_i alternating between the two kernels and
/// r in G_C. This expression is unique.
struct AmalgamForm {
  AmalgamSplitting splitting;
  std::vector<KernelFactor> ks;
  NormalForm r;

  /// |g|_*
  std::size_t star_length() const { return ks.size(); }
  NormalForm reassemble() const;
};

AmalgamForm to_amalgam_form(NormalForm const& g,
                            AmalgamSplitting const& splitting);

/// |g|_* <= 1, or the first and last kernel factors lie on different sides.
bool is_amalgam_cyclically_reduced(AmalgamForm const& f);

struct AmalgamCyclicReduction {
  /// prefix k_1 ... k_l' of f
  NormalForm prefix;
  /// prefix^-1 * f * prefix
  AmalgamForm core;
};

/// Conjugates by the shortest prefix that makes the form cyclically reduced:
/// for |f|_* = 2l+1 the prefix has star length at most l.
AmalgamCyclicReduction amalgam_cyclically_reduce(AmalgamForm const& f);

/// k_1..k_m k_1^r..k_m^r ... k_1^{r^{n-1}}..k_m^{r^{n-1}} r^n, where
/// k^r = r k r^-1. Requires f cyclically reduced with |f|_* > 1 and n >= 1;
/// throws DomainError(Precondition) otherwise.
AmalgamForm amalgam_power(AmalgamForm const& f, Integer const& n);

/// The n-th root of f, if one exists. Requires f cyclically reduced with
/// |f|_* > 1 and n >= 1. Throws DomainError(TorsionVertex) if the G_C part
/// needs a root inside a torsion vertex group.
std::optional<AmalgamForm> amalgam_root(AmalgamForm const& f,
                                        Integer const& n);

}  // namespace gpcalc
