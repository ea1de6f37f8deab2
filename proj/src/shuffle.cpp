#include "gpcalc/shuffle.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "gpcalc/errors.hpp"

namespace gpcalc {
namespace {

using WordList = std::vector<std::vector<Syllable>>;

std::string key_of(NormalForm const& g, std::size_t extra) {
  std::string key = std::to_string(reinterpret_cast<std::uintptr_t>(g.ambient().get()));
  key += '|' + std::to_string(extra) + '|';
  for (auto const& s : g.syllables()) {
    key += std::to_string(s.vertex);
    key += ':';
    key += s.exponent.str();
    key += ';';
  }
  return key;
}

constexpr std::size_t kMaxCacheEntries = 50'000;

/// Memo table. Entries hold the ambient alive so that its address cannot be
/// reused by another graph product while the key exists. `cost` is the
/// number of states the computation visited, so that a later call with a
/// smaller budget fails exactly as a fresh computation would.
template <typename Value>
class Memo {
 public:
  struct Entry {
    Ambient ambient;
    std::size_t cost;
    std::shared_ptr<Value const> value;
  };

  std::optional<Entry> find(std::string const& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  void insert(std::string key, Entry entry) {
    std::lock_guard lock(mutex_);
    if (table_.size() >= kMaxCacheEntries) table_.clear();
    table_.emplace(std::move(key), std::move(entry));
  }

  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::map<std::string, Entry> table_;
};

Memo<WordList>& class_memo() {
  static Memo<WordList> memo;
  return memo;
}

Memo<std::vector<NormalForm>>& prefix_memo() {
  static Memo<std::vector<NormalForm>> memo;
  return memo;
}

[[noreturn]] void over_budget(std::size_t max_states) {
  throw DomainError(ErrorKind::BudgetExceeded,
                    "budget exceeded: shuffle enumeration visited more than " +
                        std::to_string(max_states) + " states");
}

std::pair<WordList, std::size_t> enumerate_class(NormalForm const& g,
                                                 std::size_t max_states) {
  auto const& graph = g.ambient()->graph();
  // Two syllables of one vertex never swap, so the vertex sequence
  // identifies a word of the class.
  auto key = [](std::vector<Syllable> const& w) {
    std::string k;
    k.reserve(w.size());
    for (auto const& s : w) k.push_back(static_cast<char>(s.vertex));
    return k;
  };
  WordList words{g.syllables()};
  std::unordered_set<std::string> seen{key(g.syllables())};
  for (std::size_t next = 0; next < words.size(); ++next) {
    for (std::size_t i = 0; i + 1 < words[next].size(); ++i) {
      auto const& w = words[next];
      if (!graph.adjacent(w[i].vertex, w[i + 1].vertex)) continue;
      auto swapped = w;
      std::swap(swapped[i], swapped[i + 1]);
      if (seen.insert(key(swapped)).second) {
        if (words.size() >= max_states) over_budget(max_states);
        words.push_back(std::move(swapped));
      }
    }
  }
  auto const count = words.size();
  return {std::move(words), count};
}

std::pair<std::vector<NormalForm>, std::size_t> enumerate_prefixes(
    NormalForm const& g, std::size_t m, std::size_t max_states) {
  auto const& graph = g.ambient()->graph();
  auto const& word = g.syllables();
  auto const n = word.size();
  // depends[j][i], i < j: syllable i must precede syllable j in every word
  // of the shuffle class.
  std::vector<std::vector<std::size_t>> depends(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!graph.adjacent(word[i].vertex, word[j].vertex)) depends[j].push_back(i);

  std::size_t visited = 1;
  std::vector<std::vector<bool>> level{std::vector<bool>(n, false)};
  for (std::size_t size = 0; size < m; ++size) {
    std::unordered_set<std::vector<bool>> next_seen;
    std::vector<std::vector<bool>> next;
    for (auto const& ideal : level) {
      for (std::size_t j = 0; j < n; ++j) {
        if (ideal[j]) continue;
        bool ready = true;
        for (auto i : depends[j])
          if (!ideal[i]) {
            ready = false;
            break;
          }
        if (!ready) continue;
        auto grown = ideal;
        grown[j] = true;
        if (next_seen.insert(grown).second) {
          if (++visited > max_states) over_budget(max_states);
          next.push_back(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }

  std::vector<NormalForm> out;
  out.reserve(level.size());
  for (auto const& ideal : level) {
    std::vector<Syllable> prefix;
    for (std::size_t i = 0; i < n; ++i)
      if (ideal[i]) prefix.push_back(word[i]);
    out.push_back(reduce(g.ambient(), std::move(prefix)));
  }
  return {std::move(out), visited};
}

}  // namespace

std::shared_ptr<WordList const> shuffle_class(NormalForm const& g,
                                              std::size_t max_states) {
  auto key = key_of(g, 0);
  if (auto hit = class_memo().find(key)) {
    if (hit->cost > max_states) over_budget(max_states);
    return hit->value;
  }
  auto [words, cost] = enumerate_class(g, max_states);
  auto value = std::make_shared<WordList const>(std::move(words));
  class_memo().insert(std::move(key), {g.ambient(), cost, value});
  return value;
}

std::shared_ptr<std::vector<NormalForm> const> shuffle_prefixes(
    NormalForm const& g, std::size_t prefix_length, std::size_t max_states) {
  if (prefix_length > g.length())
    throw DomainError(ErrorKind::Precondition, "prefix longer than the word");
  auto key = key_of(g, prefix_length + 1);
  if (auto hit = prefix_memo().find(key)) {
    if (hit->cost > max_states) over_budget(max_states);
    return hit->value;
  }
  auto [prefixes, cost] = enumerate_prefixes(g, prefix_length, max_states);
  auto value = std::make_shared<std::vector<NormalForm> const>(std::move(prefixes));
  prefix_memo().insert(std::move(key), {g.ambient(), cost, value});
  return value;
}

void clear_shuffle_cache() {
  class_memo().clear();
  prefix_memo().clear();
}

}  // namespace gpcalc
