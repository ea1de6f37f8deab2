#include "gpcalc/amalgam.hpp"

#include "gpcalc/errors.hpp"
#include "gpcalc/roots.hpp"

namespace gpcalc {
namespace {

void require_power_shape(AmalgamForm const& f, Integer const& n, char const* op) {
  if (n < 1)
    throw DomainError(ErrorKind::Precondition,
                      std::string(op) + " needs a positive exponent");
  if (f.star_length() <= 1 || !is_amalgam_cyclically_reduced(f))
    throw DomainError(ErrorKind::Precondition,
                      std::string(op) +
                          " needs a cyclically reduced form of star length > 1");
}

}  // namespace

char const* to_string(Side side) { return side == Side::A ? "A" : "B"; }

AmalgamSplitting split(Ambient const& ambient, std::optional<VertexSet> separator) {
  auto const& graph = ambient->graph();
  if (graph.is_complete())
    throw DomainError(ErrorKind::CompleteGraph,
                      "complete graph: the graph product is a direct product "
                      "and does not split");
  VertexSet c;
  if (separator) {
    if (!separator->is_subset_of(graph.vertices()) ||
        !is_separating(graph, *separator))
      throw DomainError(ErrorKind::NotSeparating,
                        format_vertex_set(graph, *separator) +
                            " does not separate the graph");
    c = *separator;
  } else {
    c = separating_sets(graph).front();
  }
  auto components = connected_components(graph, graph.vertices() - c);
  VertexSet a = components.front() | c;
  VertexSet b = (graph.vertices() - components.front());
  return {ambient, a, b, c};
}

NormalForm AmalgamForm::reassemble() const {
  NormalForm out = NormalForm::identity(splitting.ambient);
  for (auto const& k : ks) out = out * k.element;
  return out * r;
}

AmalgamForm to_amalgam_form(NormalForm const& g, AmalgamSplitting const& splitting) {
  if (!same_ambient(g.ambient(), splitting.ambient))
    throw DomainError(ErrorKind::AmbientMismatch,
                      "element and splitting belong to different graph products");
  AmalgamForm out{splitting, {}, NormalForm::identity(g.ambient())};
  // Invariant: the processed prefix equals k_1 ... k_m r. A syllable s off C
  // is moved left past r as r s r^-1, which lies in the kernel of rho_C on
  // its side.
  for (auto const& s : g.syllables()) {
    NormalForm syllable = reduce(g.ambient(), {s});
    if (splitting.c.contains(s.vertex)) {
      out.r = out.r * syllable;
      continue;
    }
    Side side = splitting.a.contains(s.vertex) ? Side::A : Side::B;
    NormalForm k = conjugate(out.r, syllable);
    if (!out.ks.empty() && out.ks.back().side == side) {
      out.ks.back().element = out.ks.back().element * k;
      if (out.ks.back().element.is_identity()) out.ks.pop_back();
    } else {
      out.ks.push_back({side, std::move(k)});
    }
  }
  return out;
}

bool is_amalgam_cyclically_reduced(AmalgamForm const& f) {
  return f.star_length() <= 1 || f.ks.front().side != f.ks.back().side;
}

AmalgamCyclicReduction amalgam_cyclically_reduce(AmalgamForm const& f) {
  auto const& ambient = f.splitting.ambient;
  if (is_amalgam_cyclically_reduced(f))
    return {NormalForm::identity(ambient), f};

  // Star length is odd here: 2l + 1 with l >= 1. Pair k_{2l+2-i} with
  // k_i^r = r k_i r^-1 and take the first i whose product survives.
  auto const m = f.star_length();
  auto const l = (m - 1) / 2;
  std::size_t chosen = l;
  for (std::size_t i = 1; i < l; ++i) {
    NormalForm paired = f.ks[m - i].element * conjugate(f.r, f.ks[i - 1].element);
    if (!paired.is_identity()) {
      chosen = i;
      break;
    }
  }
  NormalForm prefix = NormalForm::identity(ambient);
  for (std::size_t i = 0; i < chosen; ++i) prefix = prefix * f.ks[i].element;

  AmalgamForm core =
      to_amalgam_form(inverse(prefix) * f.reassemble() * prefix, f.splitting);
  if (!is_amalgam_cyclically_reduced(core))
    throw std::logic_error("amalgam_cyclically_reduce: conjugate not reduced");
  return {std::move(prefix), std::move(core)};
}

AmalgamForm amalgam_power(AmalgamForm const& f, Integer const& n) {
  require_power_shape(f, n, "amalgam_power");
  AmalgamForm out{f.splitting, {}, power(f.r, n)};
  NormalForm r_power = NormalForm::identity(f.splitting.ambient);
  for (Integer j = 0; j < n; ++j) {
    for (auto const& k : f.ks)
      out.ks.push_back({k.side, conjugate(r_power, k.element)});
    r_power = r_power * f.r;
  }
  if (!(out.reassemble() == power(f.reassemble(), n)))
    throw std::logic_error("amalgam_power: expansion disagrees with the power");
  return out;
}

std::optional<AmalgamForm> amalgam_root(AmalgamForm const& f, Integer const& n) {
  require_power_shape(f, n, "amalgam_root");
  Integer const m = f.star_length();
  if (m % n != 0) return std::nullopt;
  auto const root_length = static_cast<std::size_t>(m / n);
  if (root_length < 2) return std::nullopt;

  auto r_root = nth_root(f.r, n);
  if (!r_root) return std::nullopt;

  AmalgamForm z{f.splitting,
                {f.ks.begin(), f.ks.begin() + static_cast<std::ptrdiff_t>(root_length)},
                *r_root};
  if (!(power(z.reassemble(), n) == f.reassemble())) return std::nullopt;
  return z;
}

}  // namespace gpcalc
