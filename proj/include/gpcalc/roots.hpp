#pragma once

#include <optional>
#include <vector>

#include "gpcalc/config.hpp"
#include "gpcalc/word.hpp"

namespace gpcalc {

/// root^plog == g, and no element has a d-th power equal to g for d > plog.
/// Roots are unique since torsion-free graph products of cyclic groups have
/// unique roots.
struct PrimitiveRootResult {
  NormalForm root;
  Integer plog;
};

/// Primitive root and primitive logarithm.
///
/// The element is cyclically reduced first (both are conjugation
/// invariant), the core is split into irreducible factors, each factor is
/// handled on its own, and the results are combined with
///   plog(g) = gcd_i plog(g_i),  root(g) = prod_i root(g_i)^(plog(g_i)/plog(g)).
/// A factor of length one is a syllable v^k with root v^sign(k). For a longer
/// factor of length L, plog divides L; divisors d of L are tried in
/// decreasing order and the first d for which some prefix W of length L/d
/// of a word in the shuffle class satisfies W^d == g_i wins.
///
/// Throws DomainError(TrivialElement), DomainError(TorsionVertex) if the
/// support meets a Z/n vertex, or DomainError(BudgetExceeded).
PrimitiveRootResult plog(NormalForm const& g, Budget const& budget = {});

/// plog(g) is a power of p (including p^0). Throws DomainError(Precondition)
/// if p is not prime.
bool is_p_isolated(NormalForm const& g, Integer const& p,
                   Budget const& budget = {});

/// plog(g) == 1, i.e. <g> is a maximal cyclic subgroup.
bool is_maximal_cyclic(NormalForm const& g, Budget const& budget = {});

/// Generator of Rad(g), the set of elements with a nontrivial power in <g>.
NormalForm radical_generator(NormalForm const& g, Budget const& budget = {});

/// The unique n-th root of g, if any; the identity's root is itself.
std::optional<NormalForm> nth_root(NormalForm const& g, Integer const& n,
                                   Budget const& budget = {});

/// k with f == g^k, or nullopt. `g` must be nontrivial with torsion-free
/// support.
std::optional<Integer> in_cyclic(NormalForm const& f, NormalForm const& g,
                                 Budget const& budget = {});

struct IsolationCounterexample {
  NormalForm f;
  Integer q;
};

/// Exhaustive search for a failure of p-isolation: over every f in the ball
/// of normal-form length <= radius (exponents bounded by `exponent_bound`)
/// and every prime q <= qmax other than p, look for f^q in <g> with f not in
/// <g>. Membership is decided by exponent sums and direct powers, without
/// primitive roots. Powers f^q are computed once per ball.
class IsolationOracle {
 public:
  IsolationOracle(Ambient ambient, int radius, int qmax, int exponent_bound = 2);

  std::optional<IsolationCounterexample> counterexample(NormalForm const& g,
                                                        Integer const& p) const;

 private:
  struct Entry {
    NormalForm f;
    std::vector<NormalForm> powers;  // indexed like primes_
  };

  bool member(NormalForm const& x, NormalForm const& g) const;

  Ambient ambient_;
  int radius_;
  int qmax_;
  int exponent_bound_;
  std::vector<Integer> primes_;
  std::vector<Entry> ball_;
};

/// False iff a counterexample exists in the ball. True only means none was
/// found.
bool brute_force_isolation(NormalForm const& g, Integer const& p, int radius,
                           int qmax, int exponent_bound = 2);

}  // namespace gpcalc
