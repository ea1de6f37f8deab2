#include "gpcalc/integer.hpp"

#include <algorithm>
#include <limits>

#include "gpcalc/errors.hpp"

namespace gpcalc {

std::string to_string(Integer const& value) { return value.str(); }

Integer gcd(Integer const& a, Integer const& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer abs(Integer const& value) { return value < 0 ? Integer(-value) : value; }

bool is_prime(Integer const& value) {
  if (value < 2) return false;
  for (Integer d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

std::vector<Integer> divisors_descending(Integer const& n) {
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  std::vector<Integer> out(large.begin(), large.end());
  out.insert(out.end(), small.rbegin(), small.rend());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

bool is_power_of(Integer n, Integer const& p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::int64_t to_int64(Integer const& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min())
    throw DomainError(ErrorKind::Precondition,
                      "integer " + value.str() + " out of machine range");
  return static_cast<std::int64_t>(value);
}

char const* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "unknown vertex";
    case ErrorKind::VertexMismatch: return "vertex mismatch";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::TorsionVertex: return "torsion vertex";
    case ErrorKind::TrivialElement: return "trivial element";
    case ErrorKind::BudgetExceeded: return "budget exceeded";
    case ErrorKind::CompleteGraph: return "complete graph";
    case ErrorKind::NotSeparating: return "not separating";
    case ErrorKind::Precondition: return "precondition violated";
  }
  return "error";
}

}  // namespace gpcalc
