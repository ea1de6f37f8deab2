#include "gpcalc/vertex_group.hpp"

#include "gpcalc/errors.hpp"

namespace gpcalc {

VertexGroupSpec VertexGroupSpec::finite_cyclic(Integer n) {
  if (n < 2)
    throw DomainError(ErrorKind::Precondition,
                      "finite cyclic vertex groups need order >= 2, got " +
                          n.str());
  VertexGroupSpec spec;
  spec.kind_ = Kind::FiniteCyclic;
  spec.modulus_ = std::move(n);
  return spec;
}

std::optional<Integer> VertexGroupSpec::order() const {
  if (kind_ == Kind::InfiniteCyclic) return std::nullopt;
  return modulus_;
}

Integer VertexGroupSpec::normalize(Integer const& exponent) const {
  if (kind_ == Kind::InfiniteCyclic) return exponent;
  Integer r = exponent % modulus_;
  if (r < 0) r += modulus_;
  return r;
}

bool VertexGroupSpec::is_identity(Integer const& exponent) const {
  return normalize(exponent) == 0;
}

std::string VertexGroupSpec::to_string() const {
  if (kind_ == Kind::InfiniteCyclic) return "Z";
  return "Z/" + modulus_.str();
}

std::optional<Syllable> make_syllable(VertexGroupSpec const& group,
                                      VertexId vertex, Integer const& exponent) {
  Integer e = group.normalize(exponent);
  if (e == 0) return std::nullopt;
  return Syllable{vertex, std::move(e)};
}

std::optional<Syllable> syl_mul(VertexGroupSpec const& group, Syllable const& a,
                                Syllable const& b) {
  if (a.vertex != b.vertex)
    throw DomainError(ErrorKind::VertexMismatch,
                      "cannot multiply syllables of different vertices");
  return make_syllable(group, a.vertex, a.exponent + b.exponent);
}

Syllable syl_inverse(VertexGroupSpec const& group, Syllable const& a) {
  return Syllable{a.vertex, group.normalize(-a.exponent)};
}

std::optional<Syllable> syl_power(VertexGroupSpec const& group,
                                  Syllable const& a, Integer const& n) {
  return make_syllable(group, a.vertex, a.exponent * n);
}

SyllableRoot syl_plog(VertexGroupSpec const& group, Syllable const& a) {
  if (!group.is_torsion_free())
    throw DomainError(ErrorKind::TorsionVertex,
                      "torsion vertex: elements of " + group.to_string() +
                          " have no primitive root");
  Integer sign = a.exponent < 0 ? -1 : 1;
  return SyllableRoot{Syllable{a.vertex, sign}, abs(a.exponent)};
}

}  // namespace gpcalc
