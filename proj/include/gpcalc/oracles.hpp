#pragma once

// Brute-force reference computations for the test suite. Nothing here calls
// the reduction, canonical form or root engines: words are handled as raw
// letter sequences with their own naive rewriting, and only syllable
// arithmetic from vertex_group.hpp is shared.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "gpcalc/word.hpp"

namespace gpcalc::oracle {

struct BallSpec {
  int radius = 0;
  int exponent_bound = 1;
};

/// Minimum length over the closure of `w` under T1, T2 and T3, by breadth
/// first search. Intended for |w| <= 8; exponents must stay within int8
/// range. Throws DomainError(BudgetExceeded) past `max_states`.
std::size_t bfs_min_length(Word const& w, std::size_t max_states = 1'000'000);

/// Visits every canonical normal form of length <= radius whose exponents
/// lie in ±1..±exponent_bound (reduced mod n at Z/n vertices, duplicates
/// dropped), each exactly once, shortest first.
void for_each_in_ball(Ambient const& ambient, BallSpec spec,
                      std::function<void(std::vector<Syllable> const&)> const& visit);

/// for_each_in_ball, materialized as NormalForms.
std::vector<NormalForm> enumerate_ball(Ambient const& ambient, BallSpec spec);

/// Naive normal form: repeatedly join any joinable pair (T1/T2 across a
/// commuting interval) until none is left, then take the lexicographically
/// least word of the T3 closure.
std::vector<Syllable> naive_normal_form(Word const& w,
                                        std::size_t max_states = 1'000'000);

bool naive_equal(Word const& x, Word const& y);

/// All words reachable from a reduced syllable sequence by T3 moves.
std::vector<std::vector<Syllable>> naive_shuffle_class(
    GraphProduct const& gp, std::vector<Syllable> const& word,
    std::size_t max_states = 1'000'000);

/// The divisor-prefix search on the full shuffle class, without
/// memoization: the largest d dividing |w| such that some word of the class
/// has a prefix W0 with W0^d equal to w. `w` must be irreducible,
/// cyclically reduced and torsion-free; a single syllable returns |k|.
Integer divisor_prefix_plog(NormalForm const& w,
                            std::size_t max_states = 1'000'000);

/// Largest d such that some h in the ball of the given spec satisfies
/// h^d == w (d bounded by `max_exponent`). Equality via naive_normal_form.
Integer root_search_plog(NormalForm const& w, BallSpec candidates,
                         int max_exponent);

/// Minimum of |c g c^-1| over every c in the conjugator ball.
std::size_t conjugacy_ball_min_length(NormalForm const& g, BallSpec conjugators);

/// Homomorphisms to Z/p^k, k <= kmax, given by arbitrary vertex images
/// (orders respected at Z/n vertices). Counts those under which the image of
/// f is outside the cyclic subgroup generated by the image of g.
struct QuotientScan {
  std::size_t homomorphisms = 0;
  std::size_t separating = 0;
};

QuotientScan scan_cyclic_quotients(NormalForm const& f, NormalForm const& g,
                                   std::int64_t p, int kmax);

}  // namespace gpcalc::oracle
