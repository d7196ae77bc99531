#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordlab {

// Unbounded natural number. Pseudonorms, Hardy values and counting-lemma
// counts overflow 64 bits quickly (nmk_formula(2,2,0) is 27^27), so every
// "natural" in the public interfaces is a Nat.
using Nat = boost::multiprecision::cpp_int;

// Raised on violated preconditions (zero where positive required,
// non-descending tuples, base level below the canonical one, ...).
class domain_error : public std::invalid_argument {
 public:
  explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a computation is refused because its exact result would be
// astronomically large (enumeration caps, tower blow-ups, step budgets on
// operations that must not silently truncate).
class feasibility_error : public std::runtime_error {
 public:
  explicit feasibility_error(const std::string& what) : std::runtime_error(what) {}
};

// x^e with a guard on the result size: throws feasibility_error when the
// result would exceed max_bits. Exact otherwise.
Nat nat_pow(const Nat& x, const Nat& e, std::uint64_t max_bits = 1u << 24);

// tow_1(x)=x, tow_{n+1}(x)=x^{tow_n(x)}.  Requires n >= 1 and x >= 2.
Nat nat_tow(const Nat& n, const Nat& x, std::uint64_t max_bits = 1u << 24);

inline Nat nat_pow(const Nat& x, const Nat& e, std::uint64_t max_bits) {
  if (e == 0) return 1;
  if (x == 0) return 0;
  if (x == 1) return 1;
  // bits(x^e) ~ e * bits(x); refuse before allocating the result.
  Nat bits_estimate = e * static_cast<std::uint64_t>(boost::multiprecision::msb(x) + 1);
  if (bits_estimate > max_bits)
    throw feasibility_error("nat_pow: result near 2^" + bits_estimate.str() + " bits");
  Nat result = 1;
  Nat base = x;
  Nat k = e;
  while (k > 0) {
    if (boost::multiprecision::bit_test(k, 0)) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

inline Nat nat_tow(const Nat& n, const Nat& x, std::uint64_t max_bits) {
  if (n < 1) throw domain_error("nat_tow: height must be >= 1");
  if (x < 2) throw domain_error("nat_tow: base must be >= 2");
  Nat t = x;
  for (Nat i = 1; i < n; ++i) t = nat_pow(x, t, max_bits);
  return t;
}

}  // namespace ordlab
