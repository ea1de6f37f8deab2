#include "gpcalc/config.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "gpcalc/errors.hpp"

namespace gpcalc {
namespace {

std::size_t parse_count(std::string_view text) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw SyntaxError(0, "bad budget value '" + std::string(text) + "'");
  return value;
}

}  // namespace

Budget Budget::parse(std::string_view text) {
  Budget budget;
  if (text.find('=') == std::string_view::npos) {
    budget.shuffle_states = parse_count(text);
    return budget;
  }
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{}
                                           : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw SyntaxError(0, "bad budget item '" + std::string(item) + "'");
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "shuffle") {
      budget.shuffle_states = value;
    } else if (key == "kmax") {
      if (value < 1 || value > 30)
        throw SyntaxError(0, "kmax must lie in 1..30");
      budget.witness_kmax = static_cast<int>(value);
    } else if (key == "magnus") {
      if (value < 2 || value > 8)
        throw SyntaxError(0, "magnus must lie in 2..8");
      budget.magnus_degree = static_cast<int>(value);
    } else if (key == "cyclic") {
      budget.cyclic_image_cap = value;
    } else {
      throw SyntaxError(0, "unknown budget key '" + std::string(key) + "'");
    }
  }
  return budget;
}

Budget Budget::from_environment() {
  char const* text = std::getenv("GPCALC_BUDGET");
  if (text == nullptr || *text == '\0') return Budget{};
  return parse(text);
}

}  // namespace gpcalc
