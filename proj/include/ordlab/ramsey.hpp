#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordlab/hardy.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

// A color of the k-tuple partition L_k(eps_m) / R_k: value in [0, 3^{k-2}).
struct ColorK {
  int k;
  long value;
};

// v(eps_m; alpha, delta): the coefficient of eps_m^delta in alpha written to
// base eps_m; 0 when the power is absent.  Requires m >= l(alpha)-1.
Ordinal coeff_v(int m, const Ordinal& alpha, const Ordinal& delta);

// LD(eps_m; alpha, beta): the greatest exponent where the base-eps_m
// coefficients differ.  Requires alpha != beta.
Ordinal ld(int m, const Ordinal& alpha, const Ordinal& beta);

// L_3(eps_m; a, b, c) for a > b > c: 0/1/2 as LD(a,b) <, =, > LD(b,c).
int l3(int m, const Ordinal& a, const Ordinal& b, const Ordinal& c);

// L_k(eps_m) on a strictly descending k-tuple, k >= 3.  For k+1 the color is
// the pair <G, W> encoded G*3^{k-2} + W, where G is L_3 of the first three
// entries and W recurses on the LD tuple when it is strictly monotonic
// (descending as is, ascending reversed), else 0.
ColorK lk_color(int m, int k, std::span<const Ordinal> tuple);

// R_k on ascending element tuples of A: each element maps through the
// Ketonen-Solovay trace of tow_{k-1}(eps_m) over A, and the descending
// images are colored with L_k.  The trace is computed once per coloring.
class RkColoring {
 public:
  RkColoring(int m, int k, FinSet a, std::uint64_t ks_budget = 1'000'000);
  // Same coloring pipeline over a custom descent ordinal.  The theorem's
  // tow_{k-1}(eps_m) produces descents far past any budget for min A >= 3,
  // so the transfer mechanics are exercised with smaller mu.
  RkColoring(int m, int k, FinSet a, Ordinal mu, std::uint64_t ks_budget);

  ColorK color(std::span<const Nat> tuple) const;
  const std::vector<std::pair<Nat, Ordinal>>& trace() const { return trace_; }
  const Ordinal& mu() const { return mu_; }

 private:
  int m_;
  int k_;
  FinSet set_;
  Ordinal mu_;
  std::vector<std::pair<Nat, Ordinal>> trace_;
};

ColorK rk_color(int m, int k, const FinSet& a, std::span<const Nat> tuple,
                std::uint64_t ks_budget = 1'000'000);

// Strictly increasing, pseudonorm-nonincreasing partial map into an initial
// segment: the witness object of the L_3 case lemma.
struct EstimatingFn {
  std::vector<std::pair<Ordinal, Ordinal>> entries;  // domain descending
  Ordinal bound;
};

// nullopt when valid, else a description of the broken invariant.
std::optional<std::string> estimating_fn_violation(const EstimatingFn& fn);

// The L_3 case constructions on a descending gamma homogeneous in the given
// color: color 1 reads off coefficients at the common LD exponent (bound
// eps_m); color 2 maps each element to its LD with the next (domain loses
// the minimum, bound tow_{s-1}(eps_m) with s minimal for max gamma).
// Color 0 admits no construction.
EstimatingFn build_theta(int m, std::span<const Ordinal> gamma, int color);

template <typename T>
struct HomogeneityOutcome {
  bool homogeneous = true;
  long color = 0;
  std::vector<T> witness_a, witness_b;  // two k-subsets with distinct colors
  long color_a = 0, color_b = 0;
};

// Evaluates the colorer on every k-subset of s (which must be sorted in the
// colorer's expected order) in lexicographic index order; reports the first
// conflicting pair.
template <typename T, typename ColorFn>
HomogeneityOutcome<T> check_homogeneity(std::span<const T> s, int k, ColorFn&& colorer) {
  if (static_cast<int>(s.size()) < k) throw domain_error("check_homogeneity: |S| < k");
  HomogeneityOutcome<T> out;
  std::vector<std::size_t> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<T> tuple(k), first_tuple;
  bool have_first = false;
  while (true) {
    for (int i = 0; i < k; ++i) tuple[i] = s[idx[i]];
    long c = colorer(std::span<const T>(tuple));
    if (!have_first) {
      out.color = c;
      first_tuple = tuple;
      have_first = true;
    } else if (c != out.color) {
      out.homogeneous = false;
      out.witness_a = first_tuple;
      out.color_a = out.color;
      out.witness_b = tuple;
      out.color_b = c;
      return out;
    }
    // next k-combination
    int i = k - 1;
    while (i >= 0 && idx[i] == s.size() - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace ordlab
