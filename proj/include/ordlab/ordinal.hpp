#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ordlab/nat.hpp"

namespace ordlab {

// An ordinal below eps_omega in canonical leveled normal form.
//
// Every ordinal is either a natural number or a sum
//
//     eps_m^{a_0} * x_0 + ... + eps_m^{a_s} * x_s
//
// with strictly decreasing ordinal exponents a_i, coefficients
// 0 < x_i < eps_m, and the base level m chosen canonically as l(a)-1,
// so that eps_m <= a < eps_{m+1}.  Level -1 stands for base omega; its
// coefficients are naturals, which is where the recursion grounds out.
// With these invariants structural equality coincides with ordinal
// equality, and the struct-ordering below is the ordinal order.
//
// Values are immutable and structurally shared; copying is cheap and
// every operation in this header is pure.
class Ordinal {
 public:
  struct Term;
  struct Node;

  Ordinal() = default;                     // zero
  Ordinal(const Nat& n) : nat_(n) {}       // finite ordinal  NOLINT(google-explicit-constructor)
  Ordinal(int n);                          // NOLINT(google-explicit-constructor)
  Ordinal(unsigned long long n) : nat_(n) {}  // NOLINT(google-explicit-constructor)

  static Ordinal omega();        // eps_{-1}
  static Ordinal eps(int m);     // eps_m; eps(-1) == omega()

  bool is_zero() const { return !node_ && nat_ == 0; }
  bool is_finite() const { return !node_; }
  const Nat& nat_value() const;  // requires is_finite()

  // Base level of the canonical form; requires !is_finite().
  int node_level() const;
  std::span<const Term> terms() const;  // requires !is_finite()
  const Term& leading() const;
  const Term& last() const;

  // l(a)-1: -1 for finite ordinals, node_level() otherwise.
  int base_level() const { return node_ ? node_level() : -1; }

  std::size_t hash() const;

  bool operator==(const Ordinal& other) const;
  std::strong_ordering operator<=>(const Ordinal& other) const;

 private:
  friend Ordinal make_level(int level, std::vector<Term> terms);

  Nat nat_;                            // finite value when node_ is null
  std::shared_ptr<const Node> node_;   // non-null iff >= omega
};

struct Ordinal::Term {
  Ordinal exponent;
  Ordinal coefficient;
};

struct Ordinal::Node {
  int level;                         // m >= -1
  std::vector<Term> terms;           // nonempty, exponents strictly decreasing,
                                     // leading exponent >= 1
  std::size_t hash;
};

using Term = Ordinal::Term;

inline const Nat& Ordinal::nat_value() const {
  if (node_) throw domain_error("nat_value: ordinal is infinite");
  return nat_;
}

inline int Ordinal::node_level() const {
  if (!node_) throw domain_error("node_level: ordinal is finite");
  return node_->level;
}

inline std::span<const Term> Ordinal::terms() const {
  if (!node_) throw domain_error("terms: ordinal is finite");
  return node_->terms;
}

inline const Term& Ordinal::leading() const { return terms().front(); }
inline const Term& Ordinal::last() const { return terms().back(); }

struct OrdinalHash {
  std::size_t operator()(const Ordinal& a) const { return a.hash(); }
};

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

// Canonicalizing constructor for a term list at a given level: empty lists
// collapse to zero and a lone eps_m^0 * x term collapses to x.  Exponents
// must already be strictly decreasing.
Ordinal make_level(int level, std::vector<Term> terms);

enum class OrdKind { Zero, Successor, Limit };

OrdKind classify(const Ordinal& a);
Ordinal pred(const Ordinal& a);  // requires classify(a) == Successor

bool is_limit(const Ordinal& a);
bool is_successor(const Ordinal& a);

// Ordinal arithmetic.  add/mul are the usual non-commutative operations;
// natural_sum is the Hessenberg sum extended level by level.
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal natural_sum(const Ordinal& a, const Ordinal& b);

// omega^g in canonical form, for any g.  Epsilon fixpoints collapse:
// omega_pow(eps_m) == eps_m.
Ordinal omega_pow(const Ordinal& g);

// eps_m^e in canonical form (m = -1 gives omega^e).
Ordinal eps_pow(int m, const Ordinal& e);

// Towers never built past this height; structural recursion on deeper
// trees would blow the stack long before the values mean anything.
inline constexpr std::uint64_t kMaxTowerHeight = 10'000;

// tow_1(x) = x, tow_{n+1}(x) = x^{tow_n(x)} for x in {omega, eps_0, ...}.
Ordinal tow_ord(const Nat& n, const Ordinal& base);

// l(a) = min{n : a < eps_n} and h(a) = min{n >= 1 : a < tow_n(eps_{l-1})}.
// Rejects a = 0; neither measure is meaningful there.
std::pair<int, int> level_and_height(const Ordinal& a);

// Number of term nodes in the tree; the feasibility guard for descents
// whose normal forms grow without bound.
std::size_t term_count(const Ordinal& a);

// Pseudonorm: a itself below omega, else the maximum of h(a) and the
// pseudonorms of all exponents and coefficients of the canonical form.
Nat psn(const Ordinal& a);

// Normal form of a to base eps_m, for m >= l(a)-1.  For m > l(a)-1 this is
// the single pair (0, a); m == l(a)-1 returns the canonical terms.
std::vector<std::pair<Ordinal, Ordinal>> to_base(const Ordinal& a, int m);

// One summand of a non-canonical representation: eps_{base_level}^exponent
// * coefficient.  normalize folds a summand list with ordinal addition;
// decompose emits the canonical terms.  normalize(decompose(a)) == a.
struct RawTerm {
  int base_level;
  Ordinal exponent;
  Ordinal coefficient;
};
Ordinal normalize(const std::vector<RawTerm>& summands);
std::vector<RawTerm> decompose(const Ordinal& a);

// Base-omega Cantor expansion with natural coefficients.  Exponents are
// again leveled ordinals (omega_view(eps_0) is [(eps_0, 1)]); strictly
// decreasing.  from_omega_view inverts it.
struct OmegaTerm {
  Ordinal exponent;
  Nat coefficient;
};
std::vector<OmegaTerm> omega_view(const Ordinal& a);
Ordinal from_omega_view(std::span<const OmegaTerm> terms);

}  // namespace ordlab
