#include "gpcalc/oracles.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "gpcalc/errors.hpp"

namespace gpcalc::oracle {
namespace {

[[noreturn]] void over_budget(char const* what, std::size_t max_states) {
  throw DomainError(ErrorKind::BudgetExceeded,
                    std::string("budget exceeded: ") + what + " visited more than " +
                        std::to_string(max_states) + " states");
}

// Letters packed two bytes each: vertex id, then exponent as int8. Exponents
// at Z/n vertices are kept in [0, n).
using Packed = std::string;

std::int8_t narrow(Integer const& e) {
  if (e < -127 || e > 127)
    throw DomainError(ErrorKind::Precondition,
                      "bfs_min_length: exponent outside int8 range");
  return static_cast<std::int8_t>(e.convert_to<int>());
}

Integer normalized(GraphProduct const& gp, VertexId v, Integer const& e) {
  return gp.group(v).normalize(e);
}

Packed pack(Word const& w) {
  auto const& gp = *w.ambient();
  if (gp.size() > 255)
    throw DomainError(ErrorKind::Precondition, "bfs_min_length: too many vertices");
  Packed out;
  for (auto const& l : w.letters()) {
    out += static_cast<char>(l.vertex);
    out += static_cast<char>(narrow(normalized(gp, l.vertex, l.exponent)));
  }
  return out;
}

VertexId vertex_at(Packed const& s, std::size_t i) {
  return static_cast<unsigned char>(s[2 * i]);
}

int exponent_at(Packed const& s, std::size_t i) {
  return static_cast<std::int8_t>(s[2 * i + 1]);
}

bool same_syllables(std::vector<Syllable> const& a, std::vector<Syllable> const& b) {
  return a == b;
}

bool vertex_less(std::vector<Syllable> const& a, std::vector<Syllable> const& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](Syllable const& x, Syllable const& y) { return x.vertex < y.vertex; });
}

std::string vertex_key(std::vector<Syllable> const& w) {
  std::string key;
  for (auto const& s : w) {
    key += std::to_string(s.vertex);
    key += ',';
  }
  return key;
}

/// Joins any two syllables of one vertex separated only by letters that
/// commute with it, until no such pair remains.
std::vector<Syllable> naive_reduce(GraphProduct const& gp,
                                   std::vector<Syllable> word) {
  auto const& graph = gp.graph();
  std::erase_if(word,
                [&](Syllable const& s) { return gp.group(s.vertex).is_identity(s.exponent); });
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < word.size() && !changed; ++i) {
      VertexId v = word[i].vertex;
      for (std::size_t j = i + 1; j < word.size(); ++j) {
        VertexId u = word[j].vertex;
        if (u == v) {
          Integer e = gp.group(v).normalize(word[i].exponent + word[j].exponent);
          word.erase(word.begin() + static_cast<std::ptrdiff_t>(j));
          if (e == 0) {
            word.erase(word.begin() + static_cast<std::ptrdiff_t>(i));
          } else {
            word[i].exponent = e;
          }
          changed = true;
          break;
        }
        if (!graph.adjacent(u, v)) break;
      }
    }
  }
  return word;
}

std::vector<Syllable> to_syllables(Word const& w) {
  auto const& gp = *w.ambient();
  std::vector<Syllable> out;
  for (auto const& l : w.letters())
    out.push_back({l.vertex, normalized(gp, l.vertex, l.exponent)});
  return out;
}

std::vector<Syllable> inverted(GraphProduct const& gp, std::vector<Syllable> w) {
  std::reverse(w.begin(), w.end());
  for (auto& s : w) s.exponent = gp.group(s.vertex).normalize(-s.exponent);
  return w;
}

std::vector<Syllable> naive_form(GraphProduct const& gp, std::vector<Syllable> w) {
  auto reduced = naive_reduce(gp, std::move(w));
  auto shuffles = naive_shuffle_class(gp, reduced);
  return *std::min_element(shuffles.begin(), shuffles.end(), vertex_less);
}

std::vector<Integer> divisors_of(Integer const& n) {
  std::vector<Integer> out;
  for (Integer d = n; d >= 1; --d)
    if (n % d == 0) out.push_back(d);
  return out;
}

}  // namespace

std::size_t bfs_min_length(Word const& w, std::size_t max_states) {
  auto const& gp = *w.ambient();
  auto const& graph = gp.graph();
  Packed start = pack(w);
  std::unordered_set<Packed> seen{start};
  std::deque<Packed> queue{start};
  std::size_t best = start.size() / 2;

  auto visit = [&](Packed next) {
    if (seen.insert(next).second) {
      if (seen.size() > max_states) over_budget("bfs_min_length", max_states);
      queue.push_back(std::move(next));
    }
  };

  while (!queue.empty()) {
    Packed s = std::move(queue.front());
    queue.pop_front();
    std::size_t const n = s.size() / 2;
    best = std::min(best, n);
    for (std::size_t i = 0; i < n; ++i) {
      VertexId v = vertex_at(s, i);
      if (gp.group(v).is_identity(exponent_at(s, i))) {
        Packed t = s;
        t.erase(2 * i, 2);
        visit(std::move(t));
      }
      if (i + 1 == n) continue;
      VertexId u = vertex_at(s, i + 1);
      if (u == v) {
        Integer e = normalized(gp, v, Integer(exponent_at(s, i)) + exponent_at(s, i + 1));
        Packed t = s;
        t.erase(2 * i + 2, 2);
        t[2 * i + 1] = static_cast<char>(narrow(e));
        visit(std::move(t));
      } else if (graph.adjacent(u, v)) {
        Packed t = s;
        std::swap(t[2 * i], t[2 * i + 2]);
        std::swap(t[2 * i + 1], t[2 * i + 3]);
        visit(std::move(t));
      }
    }
  }
  return best;
}

void for_each_in_ball(Ambient const& ambient, BallSpec spec,
                      std::function<void(std::vector<Syllable> const&)> const& visit) {
  auto const& gp = *ambient;
  auto const& graph = gp.graph();
  std::vector<std::vector<Integer>> exponents(gp.size());
  for (VertexId v = 0; v < gp.size(); ++v) {
    std::set<Integer> distinct;
    for (int e = 1; e <= spec.exponent_bound; ++e) {
      for (int sign : {1, -1}) {
        Integer x = gp.group(v).normalize(sign * e);
        if (x != 0) distinct.insert(x);
      }
    }
    exponents[v].assign(distinct.begin(), distinct.end());
  }

  std::vector<Syllable> word;
  auto accepts = [&](VertexId v) {
    for (std::size_t i = word.size(); i-- > 0;) {
      VertexId u = word[i].vertex;
      if (u == v) return false;
      if (!graph.adjacent(u, v)) return true;
      if (u > v) return false;
    }
    return true;
  };
  auto extend = [&](auto& self, std::size_t length) -> void {
    if (word.size() == length) {
      visit(word);
      return;
    }
    for (VertexId v = 0; v < gp.size(); ++v) {
      if (!accepts(v)) continue;
      for (auto const& e : exponents[v]) {
        word.push_back({v, e});
        self(self, length);
        word.pop_back();
      }
    }
  };
  for (int length = 0; length <= spec.radius; ++length)
    extend(extend, static_cast<std::size_t>(length));
}

std::vector<NormalForm> enumerate_ball(Ambient const& ambient, BallSpec spec) {
  std::vector<NormalForm> out;
  for_each_in_ball(ambient, spec, [&](std::vector<Syllable> const& w) {
    out.push_back(reduce(ambient, w));
  });
  return out;
}

std::vector<std::vector<Syllable>> naive_shuffle_class(
    GraphProduct const& gp, std::vector<Syllable> const& word,
    std::size_t max_states) {
  auto const& graph = gp.graph();
  std::vector<std::vector<Syllable>> out{word};
  std::unordered_set<std::string> seen{vertex_key(word)};
  for (std::size_t next = 0; next < out.size(); ++next) {
    for (std::size_t i = 0; i + 1 < out[next].size(); ++i) {
      auto const& w = out[next];
      if (w[i].vertex == w[i + 1].vertex ||
          !graph.adjacent(w[i].vertex, w[i + 1].vertex))
        continue;
      auto t = w;
      std::swap(t[i], t[i + 1]);
      if (seen.insert(vertex_key(t)).second) {
        if (out.size() >= max_states) over_budget("naive_shuffle_class", max_states);
        out.push_back(std::move(t));
      }
    }
  }
  return out;
}

std::vector<Syllable> naive_normal_form(Word const& w, std::size_t max_states) {
  auto const& gp = *w.ambient();
  auto reduced = naive_reduce(gp, to_syllables(w));
  auto shuffles = naive_shuffle_class(gp, reduced, max_states);
  return *std::min_element(shuffles.begin(), shuffles.end(), vertex_less);
}

bool naive_equal(Word const& x, Word const& y) {
  if (!same_ambient(x.ambient(), y.ambient()))
    throw DomainError(ErrorKind::AmbientMismatch,
                      "words belong to different graph products");
  return same_syllables(naive_normal_form(x), naive_normal_form(y));
}

Integer divisor_prefix_plog(NormalForm const& w, std::size_t max_states) {
  auto const& gp = *w.ambient();
  auto const& word = w.syllables();
  if (word.empty())
    throw DomainError(ErrorKind::TrivialElement, "divisor_prefix_plog: trivial element");
  for (auto const& s : word)
    if (!gp.group(s.vertex).is_torsion_free())
      throw DomainError(ErrorKind::TorsionVertex, "divisor_prefix_plog: torsion vertex");
  if (word.size() == 1) return abs(word.front().exponent);

  auto shuffles = naive_shuffle_class(gp, word, max_states);
  std::set<std::vector<std::pair<VertexId, Integer>>> members;
  auto as_pairs = [](auto first, auto last) {
    std::vector<std::pair<VertexId, Integer>> out;
    for (; first != last; ++first) out.emplace_back(first->vertex, first->exponent);
    return out;
  };
  for (auto const& s : shuffles) members.insert(as_pairs(s.begin(), s.end()));

  Integer const length = word.size();
  for (Integer const& d : divisors_of(length)) {
    if (d == 1) break;
    auto prefix = static_cast<std::ptrdiff_t>(length / d);
    for (auto const& s : shuffles) {
      auto block = as_pairs(s.begin(), s.begin() + prefix);
      std::vector<std::pair<VertexId, Integer>> repeated;
      for (Integer i = 0; i < d; ++i) repeated.insert(repeated.end(), block.begin(), block.end());
      if (members.count(repeated)) return d;
    }
  }
  return 1;
}

Integer root_search_plog(NormalForm const& w, BallSpec candidates, int max_exponent) {
  auto const& gp = *w.ambient();
  auto target = naive_form(gp, std::vector<Syllable>(w.syllables()));
  Integer best = 0;
  for_each_in_ball(w.ambient(), candidates, [&](std::vector<Syllable> const& h) {
    for (int d = max_exponent; d > best; --d) {
      std::vector<Syllable> repeated;
      for (int i = 0; i < d; ++i) repeated.insert(repeated.end(), h.begin(), h.end());
      if (same_syllables(naive_form(gp, std::move(repeated)), target)) {
        best = d;
        break;
      }
    }
  });
  return best;
}

std::size_t conjugacy_ball_min_length(NormalForm const& g, BallSpec conjugators) {
  auto const& gp = *g.ambient();
  std::size_t best = g.length();
  for_each_in_ball(g.ambient(), conjugators, [&](std::vector<Syllable> const& c) {
    std::vector<Syllable> word = c;
    word.insert(word.end(), g.syllables().begin(), g.syllables().end());
    auto back = inverted(gp, c);
    word.insert(word.end(), back.begin(), back.end());
    best = std::min(best, naive_reduce(gp, std::move(word)).size());
  });
  return best;
}

QuotientScan scan_cyclic_quotients(NormalForm const& f, NormalForm const& g,
                                   std::int64_t p, int kmax) {
  auto const& gp = *f.ambient();
  auto const n = gp.size();
  QuotientScan out;
  std::int64_t m = 1;
  for (int k = 1; k <= kmax; ++k) {
    m *= p;
    std::vector<std::vector<std::int64_t>> allowed(n);
    for (VertexId v = 0; v < n; ++v) {
      auto order = gp.group(v).order();
      for (std::int64_t x = 0; x < m; ++x)
        if (!order || (*order * x) % m == 0) allowed[v].push_back(x);
    }
    std::vector<std::int64_t> images(n);
    auto image_of = [&](NormalForm const& h) {
      Integer total = 0;
      for (auto const& s : h.syllables()) total += s.exponent * images[s.vertex];
      Integer r = total % m;
      if (r < 0) r += m;
      return r.convert_to<std::int64_t>();
    };
    auto assign = [&](auto& self, VertexId v) -> void {
      if (v == n) {
        ++out.homomorphisms;
        std::int64_t pf = image_of(f);
        std::int64_t pg = image_of(g);
        bool inside = false;
        for (std::int64_t j = 0; j < m && !inside; ++j) inside = (j * pg) % m == pf;
        if (!inside) ++out.separating;
        return;
      }
      for (auto x : allowed[v]) {
        images[v] = x;
        self(self, v + 1);
      }
    };
    assign(assign, 0);
  }
  return out;
}

}  // namespace gpcalc::oracle
