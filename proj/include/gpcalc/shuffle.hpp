#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "gpcalc/word.hpp"

namespace gpcalc {

/// Every reduced word for `g`, obtained by closing its normal form under
/// syllable shuffling (T3). Results are memoized per element; the class is
/// exponential in general, so more than `max_states` words raise
/// DomainError(BudgetExceeded).
std::shared_ptr<std::vector<std::vector<Syllable>> const> shuffle_class(
    NormalForm const& g, std::size_t max_states);

/// Distinct elements represented by the length-`prefix_length` prefixes of
/// the words in the shuffle class of `g`. These are the order ideals of the
/// syllable dependence order, enumerated without materializing the whole
/// class; at most `max_states` ideals are visited. Memoized.
std::shared_ptr<std::vector<NormalForm> const> shuffle_prefixes(
    NormalForm const& g, std::size_t prefix_length, std::size_t max_states);

/// Drops every memoized result.
void clear_shuffle_cache();

}  // namespace gpcalc
