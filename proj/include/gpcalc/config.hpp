#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace gpcalc {

/// Search limits. Exceeding one is reported as
/// DomainError(BudgetExceeded), never truncated silently.
struct Budget {
  /// States visited while enumerating a shuffle class or its prefixes.
  std::size_t shuffle_states = 1'000'000;
  /// Largest k tried for quotients over Z/p^k.
  int witness_kmax = 4;
  /// Largest truncation degree of Magnus witness targets (2 disables them).
  int magnus_degree = 5;
  /// Largest cyclic image enumerated when checking a witness certificate.
  std::size_t cyclic_image_cap = 100'000;

  /// Parses "shuffle=N,kmax=K,cyclic=M,magnus=D" (any subset, any order) or a bare
  /// integer, which sets `shuffle_states`. Throws SyntaxError.
  static Budget parse(std::string_view text);
  /// Budget::parse of $GPCALC_BUDGET, defaults if unset.
  static Budget from_environment();
};

}  // namespace gpcalc
