#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpcalc/config.hpp"
#include "gpcalc/word.hpp"

namespace gpcalc {

enum class TargetKind {
  /// (Z/p^k)^|V|, one coordinate per vertex.
  AbelianizationModPk,
  /// 3x3 upper unitriangular matrices over Z/p^k, stored as the above
  /// diagonal entries (x, y, z) of [[1,x,z],[0,1,y],[0,0,1]].
  UnitriangularModPk,
  /// Units 1 + m of the truncated partially commutative power series ring
  /// Z/p^k<<X_v>> / (X_u X_v = X_v X_u for edges, monomials of degree >=
  /// `degree`). Stored as the coefficients of m over the monomial basis.
  /// A vertex v maps to 1 + X_v, so edge relations hold by construction.
  MagnusModPk,
};

char const* to_string(TargetKind kind);

/// Largest monomial basis a Magnus target may have; larger candidates are
/// skipped by the search.
inline constexpr std::size_t kMaxMagnusBasis = 4096;

/// Coordinates of an element of a target group.
using TargetElement = std::vector<std::int64_t>;

/// A finite p-group of one of the supported shapes.
class TargetGroup {
 public:
  TargetGroup(TargetKind kind, std::int64_t p, int k, std::size_t rank);
  /// The Magnus target over the graph of `gp`, truncated below `degree`
  /// (at least 2). Throws DomainError(BudgetExceeded) if the basis exceeds
  /// kMaxMagnusBasis.
  static TargetGroup magnus(std::int64_t p, int k, GraphProduct const& gp,
                            int degree);

  TargetKind kind() const { return kind_; }
  std::int64_t p() const { return p_; }
  int k() const { return k_; }
  std::int64_t modulus() const { return modulus_; }
  std::size_t rank() const { return rank_; }
  /// Truncation degree of a Magnus target, 0 otherwise.
  int degree() const { return degree_; }
  /// Monomials indexing the coordinates of a Magnus target, each a
  /// canonical (lexicographically least) word in the vertices. Empty for
  /// the other kinds.
  std::vector<std::vector<VertexId>> const& basis() const;
  /// log_p |Q|
  std::size_t order_exponent() const;

  TargetElement identity() const;
  TargetElement multiply(TargetElement const& x, TargetElement const& y) const;
  TargetElement inverse(TargetElement const& x) const;
  TargetElement power(TargetElement const& x, Integer const& n) const;
  /// Entries are reduced and the shape matches.
  bool is_element(TargetElement const& x) const;

 private:
  TargetKind kind_;
  std::int64_t p_;
  int k_;
  std::int64_t modulus_;
  std::size_t rank_;
  int degree_ = 0;
  struct MagnusTable;
  std::shared_ptr<MagnusTable const> table_;
};

/// A homomorphism onto a finite p-group separating f from <g>.
struct Witness {
  std::int64_t p = 0;
  TargetKind target = TargetKind::AbelianizationModPk;
  int k = 1;
  /// Image of each vertex generator, indexed by vertex id.
  std::vector<TargetElement> images;
  /// pi(f)
  TargetElement element_image;
  /// pi(<g>), in the order g^0, g^1, ...
  std::vector<TargetElement> subgroup_image;
  /// Truncation degree, for MagnusModPk only.
  int degree = 0;

  TargetGroup group(GraphProduct const& gp) const;
};

/// pi(g) for a homomorphism given by vertex images.
TargetElement evaluate(TargetGroup const& group,
                       std::vector<TargetElement> const& images,
                       NormalForm const& g);

/// Sound, incomplete search for a Witness. Candidates, in order:
/// abelianization mod p^k for k = 1..kmax (Z vertices map to coordinate
/// generators, Z/n vertices to an element of order gcd of p-part and p^k),
/// then UT_3(Z/p^k) for k = 1..kmax with vertex images whose above diagonal
/// entries lie in {0,1}, keeping only assignments that respect every
/// relation, then Magnus targets for degree = 3..magnus_degree and
/// k = 1..kmax with Z vertices sent to 1 + X_v and Z/n vertices to 1.
/// Returns the first candidate whose certificate checks.
///
/// Throws DomainError(Precondition) if p is not prime or f lies in <g>
/// (then no witness can exist).
std::optional<Witness> find_witness(NormalForm const& f, NormalForm const& g,
                                    Integer const& p, Budget const& budget = {});

/// Rechecks a witness from scratch: the target is a p-group, every edge
/// relation and torsion relation holds for the images, and pi(f) is not a
/// power of pi(g).
bool verify_witness(Witness const& w, NormalForm const& f, NormalForm const& g,
                    Integer const& p);

/// Human-readable report.
std::string format_witness(GraphProduct const& gp, Witness const& w);

}  // namespace gpcalc
