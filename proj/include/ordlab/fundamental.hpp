#pragma once

#include <cstdint>
#include <vector>

#include "ordlab/ordinal.hpp"

namespace ordlab {

// Fundamental sequence lam[n] for a limit lam, n >= 1.  Cases, with the
// last term of the normal form written eps_m^e * x:
//   eps_m[n]           = tow_n(eps_{m-1})        (omega[n] = n)
//   eps_m^{s+1}[n]     = eps_m^s * eps_m[n]
//   eps_m^{e}[n]       = eps_m^{e[n]}            (e limit)
//   eps_m^e*(x+1)[n]   = eps_m^e*x + eps_m^e[n]
//   eps_m^e*x[n]       = eps_m^e*x[n]            (x limit)
// and an additive prefix passes through untouched.
Ordinal fs(const Ordinal& lam, const Nat& n);

// fs on limits, predecessor on successors.  Rejects zero.
Ordinal step_down(const Ordinal& a, const Nat& n);

// A =>_n descent record: steps[0] is the start, steps[i+1] = steps[i][n]
// (predecessor at successors), strictly decreasing.
struct Chain {
  Ordinal start;
  Nat index;
  std::vector<Ordinal> steps;
};

enum class ReachStatus { Yes, No, BudgetExceeded };

struct ReachResult {
  ReachStatus status;
  Chain chain;  // steps recorded only when requested
};

// Does beta =>_n alpha hold?  Walks the deterministic descent from beta;
// chains are strictly decreasing, so the walk stops early once it passes
// below alpha.  Reflexive: reaches(b, b, n) is Yes with a length-0 chain.
ReachResult reaches(const Ordinal& beta, const Ordinal& alpha, const Nat& n,
                    std::uint64_t budget = 1'000'000, bool record_chain = true);

}  // namespace ordlab
