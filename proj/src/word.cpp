#include "gpcalc/word.hpp"

#include <cctype>
#include <charconv>

#include "gpcalc/errors.hpp"

namespace gpcalc {
namespace {

constexpr std::size_t kMaxParsedLetters = 1'000'000;

/// Appends `s` to the reduced word `out`, joining it with the nearest
/// syllable of the same vertex reachable across a commuting interval.
/// Dropping a syllable that cancels keeps the word reduced: any pair that
/// becomes joinable across the gap was already joinable before.
void push_reduced(GraphProduct const& gp, std::vector<Syllable>& out,
                  Syllable s) {
  VertexSet const link = gp.graph().link(s.vertex);
  for (std::size_t i = out.size(); i-- > 0;) {
    VertexId u = out[i].vertex;
    if (u == s.vertex) {
      if (auto joined = syl_mul(gp.group(u), out[i], s)) {
        out[i] = std::move(*joined);
      } else {
        out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      }
      return;
    }
    if (!link.contains(u)) break;
  }
  out.push_back(std::move(s));
}

/// Lexicographically least linear extension of the dependence order: emit,
/// at each step, the least vertex whose syllable can be shuffled to the
/// front of what remains.
void canonicalize(GraphProduct const& gp, std::vector<Syllable>& word) {
  auto const n = word.size();
  if (n < 2) return;
  std::vector<VertexSet> links(gp.size());
  for (VertexId v = 0; v < gp.size(); ++v) links[v] = gp.graph().link(v);

  std::vector<char> used(n, 0);
  std::vector<Syllable> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexSet before;
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      VertexId v = word[i].vertex;
      if (before.is_subset_of(links[v]) && (best == n || v < word[best].vertex))
        best = i;
      before.insert(v);
    }
    used[best] = 1;
    out.push_back(std::move(word[best]));
  }
  word = std::move(out);
}

void check_same(Ambient const& a, Ambient const& b) {
  if (!same_ambient(a, b))
    throw DomainError(ErrorKind::AmbientMismatch,
                      "elements belong to different graph products");
}

// word := item* ; item := atom ('^' int)? ; atom := name | '(' word ')'
class WordParser {
 public:
  WordParser(Ambient const& ambient, std::string_view text)
      : ambient_(ambient), text_(text) {}

  std::vector<Letter> parse() {
    auto letters = parse_sequence();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected ')'");
    return letters;
  }

 private:
  static bool is_name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '^' &&
           c != '(' && c != ')' && c != '#';
  }

  [[noreturn]] void fail(std::string const& what) const {
    throw SyntaxError(0, "bad word '" + std::string(text_) + "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::vector<Letter> parse_sequence() {
    std::vector<Letter> out;
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return out;
      auto item = parse_item();
      out.insert(out.end(), item.begin(), item.end());
      if (out.size() > kMaxParsedLetters) fail("word too long");
    }
  }

  std::vector<Letter> parse_item() {
    std::vector<Letter> atom;
    bool group = false;
    if (text_[pos_] == '(') {
      ++pos_;
      atom = parse_sequence();
      if (pos_ == text_.size()) fail("missing ')'");
      ++pos_;
      group = true;
    } else if (is_name_char(text_[pos_])) {
      auto start = pos_;
      while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
      auto name = text_.substr(start, pos_ - start);
      atom.push_back(Letter{ambient_->graph().id(name), 1});
    } else {
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      Integer n = parse_integer();
      if (!group) {
        atom.front().exponent = n;
        return atom;
      }
      return repeat(atom, n);
    }
    return atom;
  }

  Integer parse_integer() {
    auto start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    auto digits = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (digits == pos_) fail("expected an integer exponent");
    std::string token(text_.substr(start, pos_ - start));
    if (token.front() == '+') token.erase(0, 1);
    return Integer(token);
  }

  std::vector<Letter> repeat(std::vector<Letter> const& atom, Integer const& n) {
    std::vector<Letter> block = atom;
    if (n < 0) {
      block.assign(atom.rbegin(), atom.rend());
      for (auto& l : block) l.exponent = -l.exponent;
    }
    Integer count = abs(n);
    if (count * block.size() > kMaxParsedLetters) fail("word too long");
    std::vector<Letter> out;
    for (Integer i = 0; i < count; ++i) out.insert(out.end(), block.begin(), block.end());
    return out;
  }

  Ambient const& ambient_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(Ambient ambient, std::vector<Letter> letters)
    : ambient_(std::move(ambient)), letters_(std::move(letters)) {
  for (auto const& l : letters_)
    if (l.vertex >= ambient_->size())
      throw DomainError(ErrorKind::UnknownVertex,
                        "unknown vertex id " + std::to_string(l.vertex));
}

Word::Word(NormalForm const& nf) : ambient_(nf.ambient()) {
  letters_.reserve(nf.length());
  for (auto const& s : nf.syllables()) letters_.push_back(Letter{s.vertex, s.exponent});
}

NormalForm NormalForm::identity(Ambient ambient) {
  return NormalForm(std::move(ambient), {});
}

bool NormalForm::operator==(NormalForm const& other) const {
  return syllables_ == other.syllables_ && same_ambient(ambient_, other.ambient_);
}

NormalForm reduce(Word const& w) {
  auto const& gp = *w.ambient();
  std::vector<Syllable> out;
  out.reserve(w.size());
  for (auto const& l : w.letters())
    if (auto s = make_syllable(gp.group(l.vertex), l.vertex, l.exponent))
      push_reduced(gp, out, std::move(*s));
  canonicalize(gp, out);
  return NormalForm(w.ambient(), std::move(out));
}

NormalForm reduce(Ambient const& ambient, std::vector<Syllable> syllables) {
  auto const& gp = *ambient;
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (auto& s : syllables) {
    if (s.vertex >= gp.size())
      throw DomainError(ErrorKind::UnknownVertex,
                        "unknown vertex id " + std::to_string(s.vertex));
    if (auto t = make_syllable(gp.group(s.vertex), s.vertex, s.exponent))
      push_reduced(gp, out, std::move(*t));
  }
  canonicalize(gp, out);
  return NormalForm(ambient, std::move(out));
}

bool equal(Word const& x, Word const& y) {
  check_same(x.ambient(), y.ambient());
  return reduce(x).syllables() == reduce(y).syllables();
}

VertexSet support(NormalForm const& g) {
  VertexSet out;
  for (auto const& s : g.syllables()) out.insert(s.vertex);
  return out;
}

FirstLast first_last(NormalForm const& g) {
  auto const& graph = g.ambient()->graph();
  auto const& word = g.syllables();
  FirstLast out;
  VertexSet before;
  for (auto const& s : word) {
    if (before.is_subset_of(graph.link(s.vertex))) out.first.insert(s.vertex);
    before.insert(s.vertex);
  }
  VertexSet after;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (after.is_subset_of(graph.link(it->vertex))) out.last.insert(it->vertex);
    after.insert(it->vertex);
  }
  return out;
}

NormalForm retract(NormalForm const& g, VertexSet xs) {
  std::vector<Syllable> kept;
  for (auto const& s : g.syllables())
    if (xs.contains(s.vertex)) kept.push_back(s);
  return reduce(g.ambient(), std::move(kept));
}

NormalForm operator*(NormalForm const& x, NormalForm const& y) {
  check_same(x.ambient(), y.ambient());
  auto const& gp = *x.ambient();
  std::vector<Syllable> out = x.syllables();
  out.reserve(x.length() + y.length());
  for (auto const& s : y.syllables()) push_reduced(gp, out, s);
  canonicalize(gp, out);
  return NormalForm(x.ambient(), std::move(out));
}

bool reduced_product(NormalForm const& x, NormalForm const& y) {
  check_same(x.ambient(), y.ambient());
  bool by_length = (x * y).length() == x.length() + y.length();
  bool by_letters = !first_last(x).last.intersects(first_last(y).first);
  if (by_length != by_letters)
    throw std::logic_error("reduced_product: length and FL/LL criteria disagree");
  return by_length;
}

NormalForm inverse(NormalForm const& g) {
  auto const& gp = *g.ambient();
  std::vector<Syllable> out;
  out.reserve(g.length());
  for (auto it = g.syllables().rbegin(); it != g.syllables().rend(); ++it)
    out.push_back(syl_inverse(gp.group(it->vertex), *it));
  canonicalize(gp, out);
  return NormalForm(g.ambient(), std::move(out));
}

NormalForm power(NormalForm const& g, Integer n) {
  NormalForm base = n < 0 ? inverse(g) : g;
  if (n < 0) n = -n;
  NormalForm result = NormalForm::identity(g.ambient());
  while (n > 0) {
    if ((n & 1) != 0) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

NormalForm conjugate(NormalForm const& c, NormalForm const& g) {
  return c * g * inverse(c);
}

bool is_reduced(GraphProduct const& gp, std::span<Syllable const> syllables) {
  for (std::size_t j = 0; j < syllables.size(); ++j) {
    VertexId v = syllables[j].vertex;
    if (gp.group(v).is_identity(syllables[j].exponent)) return false;
    VertexSet const link = gp.graph().link(v);
    for (std::size_t i = j; i-- > 0;) {
      if (syllables[i].vertex == v) return false;
      if (!link.contains(syllables[i].vertex)) break;
    }
  }
  return true;
}

Word parse_word(Ambient const& ambient, std::string_view text) {
  return Word(ambient, WordParser(ambient, text).parse());
}

NormalForm parse_element(Ambient const& ambient, std::string_view text) {
  return reduce(parse_word(ambient, text));
}

std::string to_string(GraphProduct const& gp, Syllable const& s) {
  std::string out = gp.graph().name(s.vertex);
  if (s.exponent != 1) out += "^" + s.exponent.str();
  return out;
}

std::string to_string(NormalForm const& g) {
  std::string out;
  for (auto const& s : g.syllables()) {
    if (!out.empty()) out += ' ';
    out += to_string(*g.ambient(), s);
  }
  return out;
}

std::string to_string(Word const& w) {
  std::string out;
  for (auto const& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.ambient()->graph().name(l.vertex);
    if (l.exponent != 1) out += "^" + l.exponent.str();
  }
  return out;
}

}  // namespace gpcalc
