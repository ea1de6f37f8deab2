#include "gpcalc/roots.hpp"

#include <stdexcept>

#include "gpcalc/cyclic.hpp"
#include "gpcalc/errors.hpp"
#include "gpcalc/factorization.hpp"
#include "gpcalc/oracles.hpp"
#include "gpcalc/shuffle.hpp"

namespace gpcalc {
namespace {

void require_plog_domain(NormalForm const& g) {
  if (g.is_identity())
    throw DomainError(ErrorKind::TrivialElement,
                      "trivial element: the primitive logarithm is not defined");
  VertexSet bad = support(g) & g.ambient()->torsion_vertices();
  if (!bad.empty())
    throw DomainError(ErrorKind::TorsionVertex,
                      "torsion vertex " + format_vertex_set(g.ambient()->graph(), bad) +
                          " in the support: no primitive root");
}

void require_prime(Integer const& p) {
  if (!is_prime(p))
    throw DomainError(ErrorKind::Precondition, to_string(p) + " is not prime");
}

PrimitiveRootResult factor_plog(NormalForm const& h, Budget const& budget) {
  auto const& gp = *h.ambient();
  if (h.length() == 1) {
    auto const& s = h.syllables().front();
    SyllableRoot root = syl_plog(gp.group(s.vertex), s);
    return {reduce(h.ambient(), {root.root}), root.plog};
  }
  Integer const length = h.length();
  for (Integer const& d : divisors_descending(length)) {
    if (d == 1) break;
    auto prefixes = shuffle_prefixes(h, static_cast<std::size_t>(length / d),
                                     budget.shuffle_states);
    for (auto const& w : *prefixes)
      if (power(w, d) == h) return {w, d};
  }
  return {h, 1};
}

std::vector<Integer> primes_up_to(int bound) {
  std::vector<Integer> out;
  for (int q = 2; q <= bound; ++q)
    if (is_prime(q)) out.emplace_back(q);
  return out;
}

Integer word_length(NormalForm const& g) {
  Integer total = 0;
  for (auto const& s : g.syllables()) total += abs(s.exponent);
  return total;
}

}  // namespace

PrimitiveRootResult plog(NormalForm const& g, Budget const& budget) {
  require_plog_domain(g);
  auto reduction = cyclically_reduce(g);
  std::vector<PrimitiveRootResult> parts;
  for (auto const& factor : irreducible_factorize(reduction.core).factors)
    parts.push_back(factor_plog(factor.element, budget));

  Integer k = 0;
  for (auto const& part : parts) k = gcd(k, part.plog);
  NormalForm root = NormalForm::identity(g.ambient());
  for (auto const& part : parts) root = root * power(part.root, part.plog / k);
  root = conjugate(reduction.conjugator, root);

  if (!(power(root, k) == g))
    throw std::logic_error("plog: root^plog does not reassemble the element");
  return {std::move(root), std::move(k)};
}

bool is_p_isolated(NormalForm const& g, Integer const& p, Budget const& budget) {
  require_prime(p);
  return is_power_of(plog(g, budget).plog, p);
}

bool is_maximal_cyclic(NormalForm const& g, Budget const& budget) {
  return plog(g, budget).plog == 1;
}

NormalForm radical_generator(NormalForm const& g, Budget const& budget) {
  return plog(g, budget).root;
}

std::optional<NormalForm> nth_root(NormalForm const& g, Integer const& n,
                                   Budget const& budget) {
  if (n < 1)
    throw DomainError(ErrorKind::Precondition, "root degree must be positive");
  if (g.is_identity()) return g;
  auto result = plog(g, budget);
  if (result.plog % n != 0) return std::nullopt;
  return power(result.root, result.plog / n);
}

std::optional<Integer> in_cyclic(NormalForm const& f, NormalForm const& g,
                                 Budget const& budget) {
  if (!same_ambient(f.ambient(), g.ambient()))
    throw DomainError(ErrorKind::AmbientMismatch,
                      "elements belong to different graph products");
  if (f.is_identity()) return Integer(0);
  if (g.is_identity()) return std::nullopt;
  require_plog_domain(g);
  if (!support(f).is_subset_of(support(g))) return std::nullopt;

  auto rg = plog(g, budget);
  auto rf = plog(f, budget);
  if (rf.plog % rg.plog != 0) return std::nullopt;
  Integer k = rf.plog / rg.plog;
  if (rf.root == rg.root) {
  } else if (rf.root == inverse(rg.root)) {
    k = -k;
  } else {
    return std::nullopt;
  }
  if (!(power(g, k) == f))
    throw std::logic_error("in_cyclic: matching roots but g^k != f");
  return k;
}

IsolationOracle::IsolationOracle(Ambient ambient, int radius, int qmax,
                                 int exponent_bound)
    : ambient_(std::move(ambient)),
      radius_(radius),
      qmax_(qmax),
      exponent_bound_(exponent_bound),
      primes_(primes_up_to(qmax)) {
  for (auto& f : oracle::enumerate_ball(ambient_, {radius_, exponent_bound_})) {
    Entry entry{f, {}};
    for (auto const& q : primes_) entry.powers.push_back(power(f, q));
    ball_.push_back(std::move(entry));
  }
}

bool IsolationOracle::member(NormalForm const& x, NormalForm const& g) const {
  if (x.is_identity()) return true;
  if (g.is_identity()) return false;
  if (!support(x).is_subset_of(support(g))) return false;

  auto const& gp = *g.ambient();
  std::vector<Integer> sx(gp.size()), sg(gp.size());
  for (auto const& s : x.syllables()) sx[s.vertex] += s.exponent;
  for (auto const& s : g.syllables()) sg[s.vertex] += s.exponent;
  for (VertexId v = 0; v < gp.size(); ++v) {
    if (sg[v] == 0) continue;
    if (sx[v] % sg[v] != 0) return false;
    return power(g, sx[v] / sg[v]) == x;
  }

  // Every exponent sum of g vanishes: scan k. Letter length is additive
  // over powers of a cyclically reduced element, which bounds |k|.
  auto reduction = cyclically_reduce(g);
  NormalForm y = conjugate(inverse(reduction.conjugator), x);
  Integer bound = word_length(y) / word_length(reduction.core);
  NormalForm up = g;
  NormalForm down = inverse(g);
  for (Integer k = 1; k <= bound; ++k) {
    if (up == x || down == x) return true;
    up = up * g;
    down = down * inverse(g);
  }
  return false;
}

std::optional<IsolationCounterexample> IsolationOracle::counterexample(
    NormalForm const& g, Integer const& p) const {
  for (auto const& entry : ball_) {
    std::optional<bool> f_member;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
      if (primes_[i] == p) continue;
      if (!member(entry.powers[i], g)) continue;
      if (!f_member) f_member = member(entry.f, g);
      if (!*f_member) return IsolationCounterexample{entry.f, primes_[i]};
    }
  }
  return std::nullopt;
}

bool brute_force_isolation(NormalForm const& g, Integer const& p, int radius,
                           int qmax, int exponent_bound) {
  IsolationOracle oracle(g.ambient(), radius, qmax, exponent_bound);
  return !oracle.counterexample(g, p);
}

}  // namespace gpcalc
