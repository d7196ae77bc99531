#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordlab/hardy.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

// GO(a, alpha): the greatest ordinal below alpha whose pseudonorm is <= a.
// Requires a >= 1 and alpha >= 1.
Ordinal go(const Nat& a, const Ordinal& alpha);

// F: the largeness-inflation function.  f_explicit computes it from the
// base-omega expansion (infinite-exponent coefficients doubled, the finite
// block replaced by its suffix sums, plus the count of infinite-exponent
// copies); f_recursive is an independent route through the defining clauses
// and the natural sum, kept as a cross-check oracle.
Ordinal f_explicit(const Ordinal& alpha);
Ordinal f_recursive(const Ordinal& alpha);

// beta >> alpha: with both written to base eps_{l(beta)-1}, the least
// exponent of beta is >= the greatest exponent of alpha.
bool much_greater(const Ordinal& beta, const Ordinal& alpha);

// The labelled set of an estimation-lemma instance: G maps each element of
// the domain to an ordinal, larger elements to smaller ordinals.
struct DecreasingMap {
  FinSet domain;
  std::vector<Ordinal> values;  // aligned with domain.elements()

  const Ordinal& at(const Nat& x) const;
};

enum class EstimationVerdict { Pass, Fail, HypothesisViolation };

struct EstimationReport {
  EstimationVerdict verdict;
  std::string detail;
  Ordinal f_alpha;
  std::optional<Nat> cutoff;  // w = max{x : G(x) >= beta} when beta > 0
  HardyOutcome witness;       // the F(alpha)+1 largeness run on the checked set
};

// Checks one instance of the estimation lemma (beta = 0) or its beta > 0
// refinement: with G: A -> (<= beta+alpha) strictly decreasing, beta >> alpha
// and psn(G(x)) <= x, the set {x in A : G(x) >= beta} must be at most
// F(alpha)-large.  Hypothesis failures are a separate verdict, not lemma
// refutations.
EstimationReport check_estimation(const FinSet& a, const DecreasingMap& g,
                                  const Ordinal& beta, const Ordinal& alpha,
                                  const HardyLimits& limits = {});

}  // namespace ordlab
