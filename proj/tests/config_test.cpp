#include <doctest.h>

#include <cstdlib>

#include "gpcalc/config.hpp"
#include "gpcalc/errors.hpp"

using namespace gpcalc;

TEST_SUITE("config_test") {

TEST_CASE("parsing") {
  Budget d;
  auto b = Budget::parse("12345");
  CHECK(b.shuffle_states == 12345);
  CHECK(b.witness_kmax == d.witness_kmax);
  b = Budget::parse("kmax=2,shuffle=7");
  CHECK(b.shuffle_states == 7);
  CHECK(b.witness_kmax == 2);
  CHECK(b.cyclic_image_cap == d.cyclic_image_cap);
  CHECK(Budget::parse("cyclic=9").cyclic_image_cap == 9);
  CHECK(Budget::parse("magnus=3").magnus_degree == 3);
  for (char const* bad : {"", "x", "kmax=0", "kmax=31", "magnus=1", "magnus=9", "shuffle=", "speed=3", "shuffle=-1", "1,2"})
    CHECK_THROWS_AS(Budget::parse(bad), SyntaxError);
}

TEST_CASE("environment") {
  unsetenv("GPCALC_BUDGET");
  CHECK(Budget::from_environment().shuffle_states == Budget{}.shuffle_states);
  setenv("GPCALC_BUDGET", "shuffle=50", 1);
  CHECK(Budget::from_environment().shuffle_states == 50);
  setenv("GPCALC_BUDGET", "nonsense", 1);
  CHECK_THROWS_AS(Budget::from_environment(), SyntaxError);
  unsetenv("GPCALC_BUDGET");
}

}
