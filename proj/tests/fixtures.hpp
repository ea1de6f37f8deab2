#pragma once

#include <random>
#include <string>
#include <vector>

#include "gpcalc/presentation.hpp"
#include "gpcalc/word.hpp"

namespace fixture {

inline gpcalc::Ambient load(std::string const& name) {
  return gpcalc::make_ambient(
      gpcalc::load_presentation(std::string(GPCALC_FIXTURE_DIR) + "/" + name + ".gp"));
}

inline gpcalc::Ambient const& f2() {
  static auto const a = load("f2");
  return a;
}
inline gpcalc::Ambient const& z2() {
  static auto const a = load("z2");
  return a;
}
inline gpcalc::Ambient const& path() {
  static auto const a = load("path");
  return a;
}
inline gpcalc::Ambient const& dihedral() {
  static auto const a = load("dihedral");
  return a;
}
inline gpcalc::Ambient const& pentagon() {
  static auto const a = load("pentagon");
  return a;
}
inline gpcalc::Ambient const& z() {
  static auto const a = load("z");
  return a;
}

inline std::vector<gpcalc::Ambient> all() {
  return {f2(), z2(), path(), dihedral(), pentagon(), z()};
}

inline std::vector<gpcalc::Ambient> torsion_free() {
  return {f2(), z2(), path(), pentagon(), z()};
}

inline gpcalc::NormalForm el(gpcalc::Ambient const& a, std::string const& text) {
  return gpcalc::parse_element(a, text);
}

/// Random raw word: `length` letters with exponents in ±1..±bound.
inline gpcalc::Word random_word(gpcalc::Ambient const& a, std::size_t length, int bound,
                                std::mt19937& rng) {
  std::uniform_int_distribution<gpcalc::VertexId> vertex(
      0, static_cast<gpcalc::VertexId>(a->size() - 1));
  std::uniform_int_distribution<int> magnitude(1, bound);
  std::bernoulli_distribution negative(0.5);
  std::vector<gpcalc::Letter> letters;
  for (std::size_t i = 0; i < length; ++i) {
    int e = magnitude(rng);
    letters.push_back({vertex(rng), negative(rng) ? -e : e});
  }
  return gpcalc::Word(a, std::move(letters));
}

inline gpcalc::NormalForm random_element(gpcalc::Ambient const& a, std::size_t length,
                                         int bound, std::mt19937& rng) {
  return gpcalc::reduce(random_word(a, length, bound, rng));
}

}  // namespace fixture
