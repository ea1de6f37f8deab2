#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpcalc {

/// Exponents and logarithms are unbounded: powers multiply them.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(Integer const& value);

Integer gcd(Integer const& a, Integer const& b);

Integer abs(Integer const& value);

/// Trial division; the inputs here are desk-sized.
bool is_prime(Integer const& value);

/// Positive divisors of `n` (n > 0) in decreasing order.
std::vector<Integer> divisors_descending(Integer const& n);

/// True iff n == p^e for some e >= 0 (n > 0, p prime).
bool is_power_of(Integer n, Integer const& p);

/// Narrowing with a range check; throws DomainError(Precondition).
std::int64_t to_int64(Integer const& value);

}  // namespace gpcalc
