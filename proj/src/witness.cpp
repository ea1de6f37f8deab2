#include "gpcalc/witness.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "gpcalc/errors.hpp"
#include "gpcalc/roots.hpp"

namespace gpcalc {
namespace {

std::int64_t mod(__int128 value, std::int64_t m) {
  auto r = static_cast<std::int64_t>(value % m);
  return r < 0 ? r + m : r;
}

std::int64_t checked_pow(std::int64_t p, int k) {
  __int128 out = 1;
  for (int i = 0; i < k; ++i) {
    out *= p;
    if (out > (__int128(1) << 40))
      throw DomainError(ErrorKind::BudgetExceeded,
                        "budget exceeded: target modulus p^k is too large");
  }
  return static_cast<std::int64_t>(out);
}

/// The cyclic subgroup generated by x, or nullopt past `cap` elements.
std::optional<std::vector<TargetElement>> cyclic_image(TargetGroup const& q,
                                                       TargetElement const& x,
                                                       std::size_t cap) {
  std::vector<TargetElement> out{q.identity()};
  TargetElement y = x;
  while (y != out.front()) {
    if (out.size() >= cap) return std::nullopt;
    out.push_back(y);
    y = q.multiply(y, x);
  }
  return out;
}

bool respects_relations(GraphProduct const& gp, TargetGroup const& q,
                        std::vector<TargetElement> const& images) {
  for (auto [u, v] : gp.graph().edges())
    if (q.multiply(images[u], images[v]) != q.multiply(images[v], images[u]))
      return false;
  for (VertexId v = 0; v < gp.size(); ++v)
    if (auto n = gp.group(v).order())
      if (q.power(images[v], *n) != q.identity()) return false;
  return true;
}

/// Largest a with p^a dividing n.
int p_valuation(Integer n, Integer const& p) {
  int a = 0;
  while (n % p == 0) {
    n /= p;
    ++a;
  }
  return a;
}

/// Lexicographically least word commutation-equivalent to `w`: repeatedly
/// emit the least vertex that can be moved to the front.
std::vector<VertexId> canonical_monomial(SimplicialGraph const& graph,
                                         std::vector<VertexId> w) {
  std::vector<VertexId> out;
  while (!w.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < w.size(); ++i) {
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        movable = w[j] != w[i] && graph.adjacent(w[j], w[i]);
      if (movable && w[i] < w[best]) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

}  // namespace

struct TargetGroup::MagnusTable {
  std::vector<std::vector<VertexId>> basis;
  /// (i, j, t): monomial i times monomial j is monomial t
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> products;
};

namespace {

struct Search {
  NormalForm const& f;
  NormalForm const& g;
  std::int64_t p;
  Budget const& budget;

  std::optional<Witness> certify(TargetGroup const& q,
                                 std::vector<TargetElement> images) const {
    TargetElement pf = evaluate(q, images, f);
    auto image = cyclic_image(q, evaluate(q, images, g), budget.cyclic_image_cap);
    if (!image || std::find(image->begin(), image->end(), pf) != image->end())
      return std::nullopt;
    return Witness{p, q.kind(), q.k(), std::move(images), std::move(pf),
                   std::move(*image), q.degree()};
  }

  std::optional<Witness> abelian(int k) const {
    auto const& gp = *f.ambient();
    TargetGroup q(TargetKind::AbelianizationModPk, p, k, gp.size());
    std::vector<TargetElement> images;
    for (VertexId v = 0; v < gp.size(); ++v) {
      TargetElement e = q.identity();
      if (auto n = gp.group(v).order()) {
        int a = std::min(p_valuation(*n, p), k);
        e[v] = mod(checked_pow(p, k - a), q.modulus());
      } else {
        e[v] = 1;
      }
      images.push_back(std::move(e));
    }
    return certify(q, std::move(images));
  }

  std::optional<Witness> unitriangular(int k) const {
    auto const& gp = *f.ambient();
    auto const& graph = gp.graph();
    TargetGroup q(TargetKind::UnitriangularModPk, p, k, 3);
    std::vector<TargetElement> pool;
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) pool.push_back({x, y, z});

    std::vector<TargetElement> images(gp.size());
    std::size_t visited = 0;
    std::optional<Witness> found;
    auto extend = [&](auto& self, VertexId v) -> void {
      if (found) return;
      if (v == gp.size()) {
        found = certify(q, images);
        return;
      }
      for (auto const& candidate : pool) {
        if (++visited > budget.shuffle_states)
          throw DomainError(ErrorKind::BudgetExceeded,
                            "budget exceeded: unitriangular assignment search");
        if (auto n = gp.group(v).order())
          if (q.power(candidate, *n) != q.identity()) continue;
        bool commutes = true;
        for (VertexId u = 0; u < v && commutes; ++u)
          if (graph.adjacent(u, v))
            commutes = q.multiply(images[u], candidate) ==
                       q.multiply(candidate, images[u]);
        if (!commutes) continue;
        images[v] = candidate;
        self(self, v + 1);
        if (found) return;
      }
    };
    extend(extend, 0);
    return found;
  }

  std::optional<Witness> magnus(int degree, int k) const {
    auto const& gp = *f.ambient();
    auto q = TargetGroup::magnus(p, k, gp, degree);
    std::vector<TargetElement> images(gp.size(), q.identity());
    for (VertexId v = 0; v < gp.size(); ++v)
      if (gp.group(v).is_torsion_free()) images[v][v] = 1;
    return certify(q, std::move(images));
  }
};

}  // namespace

char const* to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::AbelianizationModPk:
      return "AbelianizationModPk";
    case TargetKind::UnitriangularModPk:
      return "UnitriangularModPk";
    case TargetKind::MagnusModPk:
      return "MagnusModPk";
  }
  return "";
}

TargetGroup::TargetGroup(TargetKind kind, std::int64_t p, int k, std::size_t rank)
    : kind_(kind),
      p_(p),
      k_(k),
      modulus_(checked_pow(p, k)),
      rank_(kind == TargetKind::UnitriangularModPk ? 3 : rank) {
  if (k < 1 || !is_prime(p))
    throw DomainError(ErrorKind::Precondition,
                      "target group needs a prime p and k >= 1");
}

TargetGroup TargetGroup::magnus(std::int64_t p, int k, GraphProduct const& gp,
                                int degree) {
  if (degree < 2)
    throw DomainError(ErrorKind::Precondition, "Magnus degree must be at least 2");
  auto const& graph = gp.graph();
  auto table = std::make_shared<MagnusTable>();
  std::vector<std::size_t> level_start{0};
  // Degree-one monomials are X_v, so vertex v is coordinate v.
  for (VertexId v = 0; v < gp.size(); ++v) table->basis.push_back({v});
  for (int d = 2; d < degree; ++d) {
    std::set<std::vector<VertexId>> next;
    for (std::size_t i = level_start.back(); i < table->basis.size(); ++i)
      for (VertexId v = 0; v < gp.size(); ++v) {
        auto m = table->basis[i];
        m.push_back(v);
        next.insert(canonical_monomial(graph, std::move(m)));
      }
    level_start.push_back(table->basis.size());
    if (table->basis.size() + next.size() > kMaxMagnusBasis)
      throw DomainError(ErrorKind::BudgetExceeded,
                        "budget exceeded: Magnus basis is too large");
    table->basis.insert(table->basis.end(), next.begin(), next.end());
  }
  std::map<std::vector<VertexId>, std::size_t> index;
  for (std::size_t i = 0; i < table->basis.size(); ++i) index[table->basis[i]] = i;
  for (std::size_t i = 0; i < table->basis.size(); ++i)
    for (std::size_t j = 0; j < table->basis.size(); ++j) {
      auto const& x = table->basis[i];
      auto const& y = table->basis[j];
      if (static_cast<int>(x.size() + y.size()) >= degree) continue;
      auto m = x;
      m.insert(m.end(), y.begin(), y.end());
      table->products.emplace_back(i, j, index.at(canonical_monomial(graph, std::move(m))));
    }

  TargetGroup q(TargetKind::MagnusModPk, p, k, table->basis.size());
  q.degree_ = degree;
  q.table_ = std::move(table);
  return q;
}

std::vector<std::vector<VertexId>> const& TargetGroup::basis() const {
  static std::vector<std::vector<VertexId>> const none;
  return table_ ? table_->basis : none;
}

std::size_t TargetGroup::order_exponent() const {
  return static_cast<std::size_t>(k_) * rank_;
}

TargetElement TargetGroup::identity() const { return TargetElement(rank_, 0); }

TargetElement TargetGroup::multiply(TargetElement const& x,
                                    TargetElement const& y) const {
  TargetElement out(rank_);
  if (kind_ == TargetKind::AbelianizationModPk) {
    for (std::size_t i = 0; i < rank_; ++i)
      out[i] = mod(__int128(x[i]) + y[i], modulus_);
  } else if (kind_ == TargetKind::MagnusModPk) {
    // (1 + x)(1 + y) = 1 + x + y + xy
    std::vector<__int128> acc(rank_);
    for (std::size_t i = 0; i < rank_; ++i) acc[i] = __int128(x[i]) + y[i];
    for (auto [i, j, t] : table_->products)
      if (x[i] && y[j]) acc[t] = (acc[t] + __int128(x[i]) * y[j]) % modulus_;
    for (std::size_t i = 0; i < rank_; ++i) out[i] = mod(acc[i], modulus_);
  } else {
    out[0] = mod(__int128(x[0]) + y[0], modulus_);
    out[1] = mod(__int128(x[1]) + y[1], modulus_);
    out[2] = mod(__int128(x[2]) + y[2] + __int128(x[0]) * y[1], modulus_);
  }
  return out;
}

TargetElement TargetGroup::inverse(TargetElement const& x) const {
  TargetElement out(rank_);
  if (kind_ == TargetKind::AbelianizationModPk) {
    for (std::size_t i = 0; i < rank_; ++i) out[i] = mod(-__int128(x[i]), modulus_);
  } else if (kind_ == TargetKind::MagnusModPk) {
    // (1 + x)^-1 = 1 - x + x^2 - ..., finite because x is nilpotent
    TargetElement term = x;
    for (int d = 1; d < degree_; ++d) {
      for (std::size_t i = 0; i < rank_; ++i)
        out[i] = mod(__int128(out[i]) + (d % 2 ? -term[i] : term[i]), modulus_);
      TargetElement next(rank_);
      for (auto [i, j, t] : table_->products)
        next[t] = mod(__int128(next[t]) + __int128(term[i]) * x[j], modulus_);
      term = std::move(next);
    }
  } else {
    out[0] = mod(-__int128(x[0]), modulus_);
    out[1] = mod(-__int128(x[1]), modulus_);
    out[2] = mod(__int128(x[0]) * x[1] - x[2], modulus_);
  }
  return out;
}

TargetElement TargetGroup::power(TargetElement const& x, Integer const& n) const {
  TargetElement base = n < 0 ? inverse(x) : x;
  Integer e = n < 0 ? Integer(-n) : n;
  TargetElement out = identity();
  while (e > 0) {
    if (e & 1) out = multiply(out, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return out;
}

bool TargetGroup::is_element(TargetElement const& x) const {
  return x.size() == rank_ &&
         std::all_of(x.begin(), x.end(),
                     [&](std::int64_t c) { return c >= 0 && c < modulus_; });
}

TargetGroup Witness::group(GraphProduct const& gp) const {
  if (target == TargetKind::MagnusModPk) return TargetGroup::magnus(p, k, gp, degree);
  return TargetGroup(target, p, k, gp.size());
}

TargetElement evaluate(TargetGroup const& group,
                       std::vector<TargetElement> const& images,
                       NormalForm const& g) {
  TargetElement out = group.identity();
  for (auto const& s : g.syllables())
    out = group.multiply(out, group.power(images.at(s.vertex), s.exponent));
  return out;
}

std::optional<Witness> find_witness(NormalForm const& f, NormalForm const& g,
                                    Integer const& p, Budget const& budget) {
  if (!same_ambient(f.ambient(), g.ambient()))
    throw DomainError(ErrorKind::AmbientMismatch,
                      "elements belong to different graph products");
  if (!is_prime(p))
    throw DomainError(ErrorKind::Precondition, to_string(p) + " is not prime");
  bool member = false;
  if (g.is_identity()) {
    member = f.is_identity();
  } else if (f.ambient()->is_torsion_free(support(g))) {
    member = in_cyclic(f, g, budget).has_value();
  }
  if (member)
    throw DomainError(ErrorKind::Precondition,
                      "f lies in <g>: no quotient can separate them");

  Search search{f, g, to_int64(p), budget};
  for (int k = 1; k <= budget.witness_kmax; ++k)
    if (auto w = search.abelian(k)) return w;
  for (int k = 1; k <= budget.witness_kmax; ++k)
    if (auto w = search.unitriangular(k)) return w;
  for (int degree = 3; degree <= budget.magnus_degree; ++degree) {
    for (int k = 1; k <= budget.witness_kmax; ++k) {
      std::optional<Witness> w;
      try {
        w = search.magnus(degree, k);
      } catch (DomainError const& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
        return std::nullopt;
      }
      if (w) return w;
    }
  }
  return std::nullopt;
}

bool verify_witness(Witness const& w, NormalForm const& f, NormalForm const& g,
                    Integer const& p) {
  if (!same_ambient(f.ambient(), g.ambient())) return false;
  if (!is_prime(p) || Integer(w.p) != p || w.k < 1) return false;
  auto const& gp = *f.ambient();
  std::optional<TargetGroup> q;
  try {
    q.emplace(w.group(gp));
  } catch (DomainError const&) {
    return false;
  }
  if (w.images.size() != gp.size()) return false;
  for (auto const& image : w.images)
    if (!q->is_element(image)) return false;
  if (!respects_relations(gp, *q, w.images)) return false;

  TargetElement pf = evaluate(*q, w.images, f);
  if (pf != w.element_image) return false;
  TargetElement pg = evaluate(*q, w.images, g);
  TargetElement y = q->identity();
  do {
    if (y == pf) return false;
    y = q->multiply(y, pg);
  } while (y != q->identity());
  return true;
}

std::string format_witness(GraphProduct const& gp, Witness const& w) {
  std::vector<std::vector<VertexId>> basis;
  if (w.target == TargetKind::MagnusModPk) basis = w.group(gp).basis();
  auto element = [&](TargetElement const& x) {
    if (!basis.empty()) {
      std::string out = "1";
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        out += " + ";
        if (x[i] != 1) out += std::to_string(x[i]) + " ";
        for (std::size_t j = 0; j < basis[i].size(); ++j)
          out += (j ? " X_" : "X_") + gp.graph().name(basis[i][j]);
      }
      return out;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(x[i]);
    }
    return out + ")";
  };
  std::ostringstream out;
  out << "target: " << to_string(w.target) << " over Z/" << w.p << "^" << w.k;
  if (w.target == TargetKind::MagnusModPk) out << ", monomials of degree < " << w.degree;
  out << "\n";
  out << "images:\n";
  for (VertexId v = 0; v < w.images.size(); ++v)
    out << "  " << gp.graph().name(v) << " -> " << element(w.images[v]) << "\n";
  out << "certificate: pi(f) = " << element(w.element_image)
      << " is not in pi(<g>), which has " << w.subgroup_image.size()
      << " elements: {";
  for (std::size_t i = 0; i < w.subgroup_image.size(); ++i) {
    if (i == 16) {
      out << ", ...";
      break;
    }
    out << (i ? ", " : "") << element(w.subgroup_image[i]);
  }
  out << "}\n";
  return out.str();
}

}  // namespace gpcalc
