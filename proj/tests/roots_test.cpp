#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gpcalc/cyclic.hpp"
#include "gpcalc/factorization.hpp"
#include "gpcalc/errors.hpp"
#include "gpcalc/oracles.hpp"
#include "gpcalc/roots.hpp"
#include "gpcalc/shuffle.hpp"

using namespace gpcalc;
using fixture::el;

namespace {

ErrorKind kind_of(auto&& thunk) {
  try {
    thunk();
  } catch (DomainError const& e) {
    return e.kind();
  }
  FAIL("expected a DomainError");
  return ErrorKind::Precondition;
}

/// The element g rewritten over the full subgroup on xs.
NormalForm into_subgroup(NormalForm const& g, Ambient const& sub, VertexSet xs) {
  auto ids = xs.members();
  std::vector<Syllable> out;
  for (auto const& s : g.syllables()) {
    auto it = std::find(ids.begin(), ids.end(), s.vertex);
    out.push_back({static_cast<VertexId>(it - ids.begin()), s.exponent});
  }
  return reduce(sub, out);
}

}  // namespace

TEST_SUITE("roots_test") {

TEST_CASE("primitive roots") {
  auto r = plog(el(fixture::z(), "a^6"));
  CHECK(r.plog == 6);
  CHECK(to_string(r.root) == "a");

  r = plog(el(fixture::z2(), "a^4 b^6"));
  CHECK(r.plog == 2);
  CHECK(to_string(r.root) == "a^2 b^3");

  r = plog(el(fixture::f2(), "a b a b a b"));
  CHECK(r.plog == 3);
  CHECK(to_string(r.root) == "a b");
  CHECK(oracle::divisor_prefix_plog(el(fixture::f2(), "a b a b a b")) == 3);

  auto g = el(fixture::path(), "u w u w^2");
  CHECK(plog(g).plog == 1);
  CHECK(oracle::divisor_prefix_plog(g) == 1);

  r = plog(el(fixture::f2(), "b (a b)^4 b^-1"));
  CHECK(r.plog == 4);
  CHECK(to_string(r.root) == "b a");
  CHECK(to_string(plog(el(fixture::f2(), "(a^-1 b^-1)^2")).root) == "a^-1 b^-1");

  CHECK(kind_of([] { plog(el(fixture::dihedral(), "x")); }) == ErrorKind::TorsionVertex);
  CHECK(kind_of([] { plog(NormalForm::identity(fixture::f2())); }) ==
        ErrorKind::TrivialElement);
}

TEST_CASE("p-isolation and maximality") {
  auto z = fixture::z();
  CHECK(is_p_isolated(el(z, "a^4"), 2));
  CHECK_FALSE(is_p_isolated(el(z, "a^4"), 3));
  for (int p : {2, 3, 5, 7}) CHECK_FALSE(is_p_isolated(el(z, "a^6"), p));
  CHECK(is_p_isolated(el(fixture::f2(), "a b"), 2));
  CHECK(is_p_isolated(el(fixture::f2(), "a b"), 3));
  CHECK(kind_of([&] { is_p_isolated(el(z, "a"), 4); }) == ErrorKind::Precondition);

  CHECK(is_maximal_cyclic(el(fixture::f2(), "a b")));
  CHECK_FALSE(is_maximal_cyclic(el(z, "a^2")));
  CHECK_FALSE(is_maximal_cyclic(el(fixture::z2(), "a^4 b^6")));
}

TEST_CASE("radicals and n-th roots") {
  CHECK(to_string(radical_generator(el(fixture::z(), "a^6"))) == "a");
  CHECK(to_string(radical_generator(el(fixture::f2(), "(a b)^2"))) == "a b");
  CHECK(to_string(radical_generator(el(fixture::z2(), "a^4 b^6"))) == "a^2 b^3");

  CHECK(to_string(*nth_root(el(fixture::z(), "a^6"), 3)) == "a^2");
  CHECK_FALSE(nth_root(el(fixture::z(), "a^6"), 4).has_value());
  CHECK(nth_root(NormalForm::identity(fixture::z()), 5)->is_identity());
}

TEST_CASE("cyclic membership") {
  CHECK(in_cyclic(el(fixture::z(), "a^6"), el(fixture::z(), "a^2")) == Integer(3));
  auto f2 = fixture::f2();
  CHECK(in_cyclic(el(f2, "(a b)^2"), el(f2, "a b")) == Integer(2));
  CHECK_FALSE(in_cyclic(el(f2, "b"), el(f2, "a")).has_value());
  CHECK(in_cyclic(el(f2, "(a b)^-3"), el(f2, "a b")) == Integer(-3));
  CHECK(in_cyclic(NormalForm::identity(f2), el(f2, "a")) == Integer(0));
  CHECK_FALSE(in_cyclic(el(f2, "a"), NormalForm::identity(f2)).has_value());
  CHECK_FALSE(in_cyclic(el(f2, "a^2"), el(f2, "a^4")).has_value());
}

TEST_CASE("brute-force isolation oracle") {
  auto z = fixture::z();
  CHECK(brute_force_isolation(el(z, "a^4"), 2, 5, 5));
  CHECK_FALSE(brute_force_isolation(el(z, "a^4"), 3, 5, 5));
  CHECK_FALSE(brute_force_isolation(el(z, "a^6"), 2, 5, 5));

  IsolationOracle oracle(z, 5, 5);
  auto cex = oracle.counterexample(el(z, "a^4"), 3);
  REQUIRE(cex);
  CHECK(cex->q == 2);
  CHECK(abs(cex->f.syllables().front().exponent) == 2);
  cex = oracle.counterexample(el(z, "a^6"), 2);
  REQUIRE(cex);
  CHECK(cex->q == 3);
}

TEST_CASE("root properties") {
  std::mt19937 rng(43);
  for (auto const& a : fixture::torsion_free()) {
    for (int trial = 0; trial < 80; ++trial) {
      auto g = fixture::random_element(a, 1 + trial % 6, 2, rng);
      if (g.is_identity()) continue;
      CAPTURE(to_string(g));
      auto r = plog(g);
      CHECK(power(r.root, r.plog) == g);
      CHECK(plog(r.root).plog == 1);
      CHECK(plog(inverse(g)).root == inverse(r.root));

      auto core = cyclically_reduce(g).core;
      for (auto const& f : irreducible_factorize(core).factors)
        if (f.element.length() > 1)
          CHECK(plog(f.element).plog == oracle::divisor_prefix_plog(f.element));

      for (int n = 1; n <= 4; ++n) {
        auto rn = plog(power(g, n));
        CHECK(rn.plog == n * r.plog);
        CHECK(rn.root == r.root);
        CHECK(in_cyclic(power(g, n), g) == Integer(n));
        CHECK(in_cyclic(power(g, -n), g) == Integer(-n));
      }
      auto c = fixture::random_element(a, trial % 3, 2, rng);
      auto rc = plog(conjugate(c, g));
      CHECK(rc.plog == r.plog);
      CHECK(rc.root == conjugate(c, r.root));

      auto xs = support(g);
      auto sub = make_ambient(a->full_subgroup(xs));
      auto rs = plog(into_subgroup(g, sub, xs));
      CHECK(rs.plog == r.plog);
      CHECK(rs.root == into_subgroup(r.root, sub, xs));
    }
  }
}

TEST_CASE("radicals meet only when equal") {
  std::mt19937 rng(47);
  for (auto const& a : fixture::torsion_free()) {
    for (int trial = 0; trial < 40; ++trial) {
      auto h = fixture::random_element(a, 1 + trial % 4, 2, rng);
      if (h.is_identity()) continue;
      auto g1 = power(h, 1 + trial % 3);
      auto g2 = power(h, -(2 + trial % 4));
      auto x = radical_generator(g1), y = radical_generator(g2);
      CHECK((x == y || x == inverse(y)));
    }
  }
}

TEST_CASE("gcd law agrees with a root search over a ball") {
  std::mt19937 rng(53);
  for (auto const& a : {fixture::f2(), fixture::z2(), fixture::path()}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto g = fixture::random_element(a, 1 + trial % 3, 2, rng);
      if (g.is_identity()) continue;
      int bound = 1;
      for (auto const& s : g.syllables()) bound = std::max(bound, abs(s.exponent).convert_to<int>());
      auto expected = oracle::root_search_plog(
          g, {static_cast<int>(g.length()), bound}, 2 * bound);
      CAPTURE(to_string(g));
      CHECK(plog(g).plog == expected);
    }
  }
  for (int j = 1; j <= 6; ++j)
    for (int k = 1; k <= 6; ++k) {
      auto g = el(fixture::z2(), "a^" + std::to_string(j) + " b^" + std::to_string(k));
      CHECK(oracle::root_search_plog(g, {2, std::max(j, k)}, std::max(j, k)) ==
            gcd(Integer(j), Integer(k)));
    }
}

TEST_CASE("shuffle budget is enforced") {
  clear_shuffle_cache();
  auto g = el(fixture::z2(), "a b");
  auto f = el(fixture::f2(), "(a b)^6");
  Budget tight;
  tight.shuffle_states = 1;
  auto pentagon = fixture::pentagon();
  auto h = el(pentagon, "(a c e b d)^3");
  CHECK(kind_of([&] { plog(h, tight); }) == ErrorKind::BudgetExceeded);
  CHECK(plog(h).plog == 3);
  CHECK(kind_of([&] { plog(h, tight); }) == ErrorKind::BudgetExceeded);
  CHECK(plog(g, tight).plog == 1);
  CHECK(plog(f).plog == 6);
}

}
