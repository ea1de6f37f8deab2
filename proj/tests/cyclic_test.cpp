#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "gpcalc/cyclic.hpp"
#include "gpcalc/oracles.hpp"

using namespace gpcalc;
using fixture::el;

TEST_SUITE("cyclic_test") {

TEST_CASE("is cyclically reduced") {
  CHECK(is_cyclically_reduced(el(fixture::f2(), "a b")));
  CHECK_FALSE(is_cyclically_reduced(el(fixture::f2(), "a b a^-1")));
  CHECK_FALSE(is_cyclically_reduced(el(fixture::path(), "u w u^-1")));
  CHECK(is_cyclically_reduced(el(fixture::path(), "u v")));
  CHECK(is_cyclically_reduced(NormalForm::identity(fixture::f2())));
}

TEST_CASE("cyclic reduction") {
  auto f2 = fixture::f2();
  auto r = cyclically_reduce(el(f2, "a b a^-1"));
  CHECK(to_string(r.conjugator) == "a");
  CHECK(to_string(r.core) == "b");

  r = cyclically_reduce(el(f2, "a b"));
  CHECK(r.conjugator.is_identity());
  CHECK(to_string(r.core) == "a b");

  auto g = el(f2, "a b a^-1 b");
  r = cyclically_reduce(g);
  CHECK(r.core.length() == 4);
  CHECK(oracle::conjugacy_ball_min_length(g, {2, 1}) == 4);

  r = cyclically_reduce(el(fixture::path(), "u w u^-1"));
  CHECK(to_string(r.core) == "w");
  CHECK(to_string(r.conjugator) == "u");
}

TEST_CASE("essential support") {
  CHECK(essential_support(el(fixture::path(), "u v u^-1")) == VertexSet{1});
  CHECK(essential_support(el(fixture::f2(), "a b a^-1")) == VertexSet{1});
  CHECK(essential_support(el(fixture::f2(), "a b")) == VertexSet{0, 1});
  CHECK(essential_support(el(fixture::path(), "v (u w) v^-1")) == VertexSet{0, 2});
}

TEST_CASE("cyclic reduction properties") {
  std::mt19937 rng(29);
  for (auto const& a : fixture::all()) {
    for (int trial = 0; trial < 60; ++trial) {
      auto g = fixture::random_element(a, trial % 6, 2, rng);
      auto r = cyclically_reduce(g);
      CAPTURE(to_string(g));
      CHECK(is_cyclically_reduced(r.core));
      CHECK(conjugate(r.conjugator, r.core) == g);
      CHECK(r.core.length() <= g.length());
      CHECK(oracle::conjugacy_ball_min_length(g, {2, 2}) == r.core.length());
      CHECK(is_cyclically_reduced(g) == (g.length() == r.core.length()));

      for (int k = 0; k < 5; ++k) {
        auto c = fixture::random_element(a, 1 + k % 3, 2, rng);
        auto h = conjugate(c, g);
        CHECK(r.core.length() <= h.length());
        CHECK(essential_support(h) == essential_support(g));
      }
    }
  }
}

}
