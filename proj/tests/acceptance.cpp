// Acceptance battery: one PASS/FAIL line per criterion, exit status 1 if
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gpcalc/amalgam.hpp"
#include "gpcalc/cyclic.hpp"
#include "gpcalc/errors.hpp"
#include "gpcalc/factorization.hpp"
#include "gpcalc/oracles.hpp"
#include "gpcalc/roots.hpp"
#include "gpcalc/witness.hpp"

using namespace gpcalc;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// g^n by repeated multiplication, n >= 0.
NormalForm naive_power(NormalForm const& g, int n) {
  auto out = NormalForm::identity(g.ambient());
  for (int i = 0; i < n; ++i) out = out * g;
  return out;
}

std::vector<Letter> all_letters(Ambient const& a, int bound) {
  std::vector<Letter> out;
  for (VertexId v = 0; v < a->size(); ++v)
    for (int e = -bound; e <= bound; ++e)
      if (e != 0) out.push_back({v, e});
  return out;
}

// 1
Outcome normal_form_minimality() {
  std::size_t words = 0, bad = 0;
  for (auto const& a : {fixture::f2(), fixture::z2(), fixture::path(), fixture::dihedral()}) {
    auto letters = all_letters(a, 2);
    std::vector<Letter> w;
    auto extend = [&](auto& self) -> void {
      Word word(a, w);
      ++words;
      if (reduce(word).length() != oracle::bfs_min_length(word)) {
        if (bad++ == 0) std::printf("  minimality mismatch: %s\n", to_string(word).c_str());
      }
      if (w.size() == 6) return;
      for (auto const& l : letters) {
        w.push_back(l);
        self(self);
        w.pop_back();
      }
    };
    extend(extend);
  }
  return {bad == 0, std::to_string(words) + " words, " + std::to_string(bad) + " mismatches"};
}

// A random rewrite of `w` that preserves the element: T3 swaps, inserted
// cancelling pairs (or a full cycle at a Z/n vertex), split and joined
// letters.
std::vector<Letter> equivalent_variant(Ambient const& a, std::vector<Letter> w,
                                       std::mt19937& rng) {
  std::uniform_int_distribution<int> move(0, 3);
  int steps = std::uniform_int_distribution<int>(1, 12)(rng);
  for (int s = 0; s < steps; ++s) {
    auto pos = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n)(rng); };
    switch (move(rng)) {
      case 0:
        if (w.size() >= 2) {
          auto i = pos(w.size() - 2);
          if (a->graph().adjacent(w[i].vertex, w[i + 1].vertex)) std::swap(w[i], w[i + 1]);
        }
        break;
      case 1: {
        VertexId v = static_cast<VertexId>(pos(a->size() - 1));
        auto i = pos(w.size());
        auto order = a->group(v).order();
        if (order) {
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), Letter{v, *order});
        } else {
          Integer e = static_cast<int>(pos(2)) + 1;
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(i), {Letter{v, e}, Letter{v, -e}});
        }
        break;
      }
      case 2:
        if (!w.empty()) {
          auto i = pos(w.size() - 1);
          Integer part = static_cast<int>(pos(4)) - 2;
          Letter rest{w[i].vertex, w[i].exponent - part};
          w[i].exponent = part;
          w.insert(w.begin() + static_cast<std::ptrdiff_t>(i) + 1, rest);
        }
        break;
      default:
        if (w.size() >= 2) {
          auto i = pos(w.size() - 2);
          if (w[i].vertex == w[i + 1].vertex) {
            w[i].exponent += w[i + 1].exponent;
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          }
        }
    }
  }
  return w;
}

// 2
Outcome shuffle_uniqueness() {
  std::mt19937 rng(2024);
  auto ambients = fixture::all();
  std::size_t bad = 0, equal_pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto const& a = ambients[static_cast<std::size_t>(trial) % ambients.size()];
    auto w = fixture::random_word(a, 1 + static_cast<std::size_t>(trial % 7), 2, rng);
    auto v = equivalent_variant(a, w.letters(), rng);
    bool expect_equal = trial % 2 == 0;
    if (!expect_equal && !v.empty()) {
      auto& l = v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
      l.exponent += 1;
    }
    Word w2(a, v);
    bool eq = equal(w, w2);
    bool same_form = reduce(w).syllables() == reduce(w2).syllables();
    bool truth = oracle::naive_equal(w, w2);
    if (eq != same_form || eq != truth || (expect_equal && !eq)) {
      if (bad++ == 0)
        std::printf("  uniqueness failure: %s vs %s\n", to_string(w).c_str(), to_string(w2).c_str());
    }
    equal_pairs += eq;
  }
  return {bad == 0, "1000 pairs, " + std::to_string(equal_pairs) + " equal, " +
                        std::to_string(bad) + " failures"};
}

// 3
Outcome conjugacy_minimality() {
  auto const& a = fixture::path();
  auto gs = oracle::enumerate_ball(a, {4, 2});
  auto cs = oracle::enumerate_ball(a, {3, 2});
  std::size_t bad = 0, reduced = 0;
  for (auto const& g : gs) {
    bool cr = is_cyclically_reduced(g);
    bool minimal = true;
    for (auto const& c : cs)
      if ((c * g * inverse(c)).length() < g.length()) {
        minimal = false;
        break;
      }
    reduced += cr;
    if (cr != minimal && bad++ == 0) std::printf("  conjugacy failure: %s\n", to_string(g).c_str());
  }
  return {bad == 0, std::to_string(gs.size()) + " elements x " + std::to_string(cs.size()) +
                        " conjugators, " + std::to_string(reduced) + " cyclically reduced, " +
                        std::to_string(bad) + " failures"};
}

// 4
Outcome power_lengths() {
  std::size_t checked = 0, bad = 0;
  for (auto const& a : {fixture::f2(), fixture::path()}) {
    for (auto const& g : oracle::enumerate_ball(a, {4, 2})) {
      if (g.length() < 2 || !is_irreducible(g) || !is_cyclically_reduced(g)) continue;
      ++checked;
      for (int n = 1; n <= 5; ++n) {
        bool ok = naive_power(g, n).length() == static_cast<std::size_t>(n) * g.length() &&
                  power_length_check(g, n);
        if (!ok && bad++ == 0)
          std::printf("  power length failure: (%s)^%d\n", to_string(g).c_str(), n);
      }
    }
  }
  return {bad == 0 && checked > 0,
          std::to_string(checked) + " elements, " + std::to_string(bad) + " failures"};
}

// 5
Outcome amalgam_powers() {
  auto const& a = fixture::path();
  auto s = split(a);
  std::mt19937 rng(55);
  std::vector<AmalgamForm> forms;
  while (forms.size() < 500) {
    auto g = fixture::random_element(a, 2 + rng() % 9, 3, rng);
    auto f = to_amalgam_form(g, s);
    auto m = f.star_length();
    if ((m == 2 || m == 4) && is_amalgam_cyclically_reduced(f)) forms.push_back(f);
  }
  std::size_t bad = 0;
  for (auto const& f : forms) {
    auto g = f.reassemble();
    for (int n = 1; n <= 4; ++n) {
      auto p = amalgam_power(f, n);
      auto direct = naive_power(g, n);
      bool ok = equal(p.reassemble(), direct) && p.star_length() == n * f.star_length() &&
                to_amalgam_form(direct, s).star_length() == p.star_length();
      if (!ok && bad++ == 0)
        std::printf("  amalgam power failure: (%s)^%d\n", to_string(g).c_str(), n);
    }
  }
  return {bad == 0, "500 forms, n <= 4, " + std::to_string(bad) + " failures"};
}

// 6
Outcome unique_roots() {
  auto ball = oracle::enumerate_ball(fixture::f2(), {3, 2});
  std::size_t bad = 0;
  for (int n : {2, 3}) {
    std::map<std::vector<std::pair<VertexId, std::string>>, std::size_t> seen;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      auto power = naive_power(ball[i], n);
      std::vector<std::pair<VertexId, std::string>> key;
      for (auto const& syl : power.syllables())
        key.emplace_back(syl.vertex, syl.exponent.str());
      auto [it, fresh] = seen.emplace(key, i);
      if (!fresh && bad++ == 0)
        std::printf("  shared power: %s, %s\n", to_string(ball[it->second]).c_str(),
                    to_string(ball[i]).c_str());
    }
  }
  return {bad == 0, std::to_string(ball.size()) + " elements, " + std::to_string(bad) + " collisions"};
}

// 7
Outcome primitive_stability() {
  std::mt19937 rng(7);
  auto ambients = fixture::torsion_free();
  std::size_t bad = 0;
  int sampled = 0;
  while (sampled < 300) {
    auto const& a = ambients[static_cast<std::size_t>(sampled) % ambients.size()];
    auto g = fixture::random_element(a, 1 + rng() % 6, 3, rng);
    if (g.is_identity()) continue;
    ++sampled;
    auto base = plog(g);
    for (int n = 1; n <= 4; ++n) {
      auto r = plog(naive_power(g, n));
      if ((r.plog != n * base.plog || r.root != base.root) && bad++ == 0)
        std::printf("  stability failure: (%s)^%d\n", to_string(g).c_str(), n);
    }
  }
  return {bad == 0, "300 elements, n <= 4, " + std::to_string(bad) + " failures"};
}

// 8
Outcome gcd_law() {
  auto const& a = fixture::z2();
  std::size_t bad = 0;
  for (int j = 1; j <= 12; ++j)
    for (int k = 1; k <= 12; ++k) {
      auto g = fixture::el(a, "a^" + std::to_string(j) + " b^" + std::to_string(k));
      Integer expected = std::gcd(j, k);
      bool ok = plog(g).plog == expected &&
                oracle::root_search_plog(g, {2, 12}, 12) == expected;
      if (!ok && bad++ == 0) std::printf("  gcd failure: a^%d b^%d\n", j, k);
    }
  return {bad == 0, "144 elements, " + std::to_string(bad) + " failures"};
}

// 9
Outcome isolation() {
  std::size_t checked = 0, bad = 0, isolated = 0;
  for (auto const& a : {fixture::f2(), fixture::z2()}) {
    IsolationOracle oracle(a, 5, 5, 2);
    for (auto const& g : oracle::enumerate_ball(a, {3, 2})) {
      if (g.is_identity()) continue;
      for (int p : {2, 3, 5}) {
        ++checked;
        bool engine = is_p_isolated(g, p);
        bool brute = !oracle.counterexample(g, p).has_value();
        isolated += engine;
        if (engine != brute && bad++ == 0)
          std::printf("  isolation mismatch: %s, p = %d\n", to_string(g).c_str(), p);
      }
    }
  }
  return {bad == 0, std::to_string(checked) + " (g, p) pairs, " + std::to_string(isolated) +
                        " isolated, " + std::to_string(bad) + " mismatches"};
}

// 10
Outcome witnesses() {
  std::size_t pairs = 0, bad = 0;
  for (auto const& a : {fixture::f2(), fixture::z2()}) {
    auto ball = oracle::enumerate_ball(a, {3, 2});
    for (auto const& g : ball) {
      if (g.is_identity() || !is_p_isolated(g, 2)) continue;
      for (auto const& f : ball) {
        if (in_cyclic(f, g)) continue;
        ++pairs;
        auto w = find_witness(f, g, 2);
        if ((!w || !verify_witness(*w, f, g, 2)) && bad++ < 5)
          std::printf("  no witness: f = %s, g = %s\n", to_string(f).c_str(), to_string(g).c_str());
      }
    }
  }
  bool control = true;
  for (auto const& a : {fixture::z(), fixture::f2()}) {
    auto f = fixture::el(a, "a"), g = fixture::el(a, "a^3");
    auto scan = oracle::scan_cyclic_quotients(f, g, 2, 3);
    control = control && !find_witness(f, g, 2) && scan.homomorphisms > 0 && scan.separating == 0;
  }
  return {bad == 0 && control, std::to_string(pairs) + " pairs, " + std::to_string(bad) +
                                   " without witness, negative control " +
                                   (control ? "holds" : "broken")};
}

// 11
Outcome amalgam_round_trip() {
  std::size_t checked = 0, bad = 0;
  for (auto const& a : {fixture::path(), fixture::f2()}) {
    auto s = split(a);
    for (auto const& g : oracle::enumerate_ball(a, {5, 2})) {
      ++checked;
      auto f = to_amalgam_form(g, s);
      bool ok = equal(f.reassemble(), g) && support(f.r).is_subset_of(s.c);
      for (std::size_t i = 0; i < f.ks.size(); ++i) {
        auto const& k = f.ks[i];
        auto side = k.side == Side::A ? s.a : s.b;
        ok = ok && !k.element.is_identity() && support(k.element).is_subset_of(side) &&
             retract(k.element, s.c).is_identity() && (i == 0 || f.ks[i - 1].side != k.side);
      }
      if (!ok && bad++ == 0) std::printf("  round trip failure: %s\n", to_string(g).c_str());
    }
  }
  return {bad == 0, std::to_string(checked) + " elements, " + std::to_string(bad) + " failures"};
}

}  // namespace

int main(int argc, char** argv) {
  struct Criterion {
    char const* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria{
      {"normal-form minimality", normal_form_minimality},
      {"canonical forms decide equality", shuffle_uniqueness},
      {"cyclically reduced iff conjugacy-minimal", conjugacy_minimality},
      {"power lengths of irreducible cyclically reduced elements", power_lengths},
      {"amalgam powers", amalgam_powers},
      {"unique roots in F2", unique_roots},
      {"primitive stability", primitive_stability},
      {"gcd law for primitive logarithms", gcd_law},
      {"p-isolation against brute force", isolation},
      {"witness soundness and the a^3 control", witnesses},
      {"amalgam round trip", amalgam_round_trip},
  };
  // Optional arguments select criteria by number.
  std::set<std::size_t> only;
  for (int i = 1; i < argc; ++i) only.insert(std::stoul(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!only.empty() && !only.count(i + 1)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].run();
    } catch (std::exception const& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu %s: %s (%.1fs)\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].name,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
    failures += !outcome.ok;
  }
  return failures == 0 ? 0 : 1;
}
