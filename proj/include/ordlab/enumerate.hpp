#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

// An enumerable fragment {alpha < bound : psn(alpha) <= psn_cap}, refused
// when generating it would materialize more than cap ordinals.
struct Universe {
  Ordinal bound;
  Nat psn_cap;
  std::uint64_t cap = 1'000'000;
};

// |{alpha < tow_k(eps_m) : psn(alpha) <= a}| in closed form:
// tow_k applied to (m+1)-fold tow_a of (a+1).  k > a clamps to a.
// m = -1 reads the bound as tow_k(omega).  Exact big integer; throws
// feasibility_error when the value itself is astronomically large.
Nat nmk_formula(const Nat& a, const Nat& k, int m, std::uint64_t max_bits = 1u << 24);

// Exact sorted enumeration of a universe.  Tower-shaped bounds are
// pre-checked against nmk_formula; arbitrary bounds generate incrementally
// and abort at the cap.
std::vector<Ordinal> enum_psn_bounded(const Universe& u);

// Recognize bound == tow_k(eps_m); returns (m, k).
std::optional<std::pair<int, int>> tower_shape(const Ordinal& bound);

}  // namespace ordlab
