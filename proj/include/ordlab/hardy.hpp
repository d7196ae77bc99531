#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ordlab/fundamental.hpp"
#include "ordlab/ordinal.hpp"

namespace ordlab {

// Finite strictly ascending set of naturals: the sets called A, B, C, D.
class FinSet {
 public:
  explicit FinSet(std::vector<Nat> elements);
  static FinSet interval(const Nat& lo, const Nat& hi);  // {lo, lo+1, ..., hi}
  static FinSet parse(const std::string& comma_separated);

  const std::vector<Nat>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const Nat& min() const { return elems_.front(); }
  const Nat& max() const { return elems_.back(); }
  bool contains(const Nat& x) const;
  // the successor of x within the set; nullopt at max
  std::optional<Nat> next_after(const Nat& x) const;

  FinSet prefix_upto(const Nat& u) const;   // {a in A : a <= u}
  FinSet suffix_from(const Nat& u) const;   // {a in A : u <= a}
  FinSet without_max() const;

  bool operator==(const FinSet&) const = default;

 private:
  std::vector<Nat> elems_;
};

// The successor structure a Hardy computation runs over: plain naturals
// (h(x) = x+1) or next-element-of-A.
struct Carrier {
  std::optional<FinSet> set;  // nullopt = naturals
  static Carrier naturals() { return Carrier{std::nullopt}; }
  static Carrier of(FinSet a) { return Carrier{std::move(a)}; }
};

enum class StepKind { LimitStep, SuccessorStep };

struct HardyStep {
  Ordinal ordinal;
  Nat position;
  StepKind kind;
};

enum class HardyStatus { Value, Undefined, BudgetExceeded };

struct HardyOutcome {
  HardyStatus status = HardyStatus::Value;
  Nat value;            // defined when status == Value
  Nat successor_steps;  // successor steps consumed; positions advance with
                        // each one, so this certifies value >= start + steps
  Nat position;         // last position reached
  Ordinal remaining;    // ordinal at the stop point (zero on Value)
};

struct HardyLimits {
  std::uint64_t max_steps = 10'000'000;            // all steps
  std::uint64_t max_successor_steps = UINT64_MAX;  // successor steps only
  std::size_t max_terms = 100'000;                 // ordinal representation size
};

using StepObserver = std::function<void(const HardyStep&)>;

// Iterative Hardy evaluation h_alpha(x): limits step the ordinal down along
// its fundamental sequence at the current position, successors advance the
// position.  Never recursive; budgets make infeasible runs a first-class
// outcome instead of a hang.
HardyOutcome hardy_run(const Ordinal& alpha, const Nat& x, const Carrier& carrier,
                       const HardyLimits& limits = {}, const StepObserver& observe = {});

struct HardyTrace {
  std::vector<HardyStep> entries;
  HardyOutcome outcome;
};

HardyTrace hardy_eval(const Ordinal& alpha, const Nat& x, const Carrier& carrier,
                      const HardyLimits& limits = {});

enum class Largeness { Small, ExactlyLarge, ProperlyLarge };

struct LargenessResult {
  Largeness kind;
  Nat value;  // h^A_alpha(min A) when defined
};

// A is alpha-large iff h^A_alpha(min A) is defined; exactly alpha-large iff
// the value is max A.  Throws feasibility_error if the step budget runs out.
LargenessResult largeness(const FinSet& a, const Ordinal& alpha,
                          const HardyLimits& limits = {});
bool is_large(const FinSet& a, const Ordinal& alpha, const HardyLimits& limits = {});
// "at most alpha-large" = (alpha+1)-small.
bool at_most_large(const FinSet& a, const Ordinal& alpha, const HardyLimits& limits = {});

// Ketonen-Solovay stepping: descend mu along fundamental sequences indexed
// by the elements of A, recording the nonlimit ordinal reached at each
// element and taking one predecessor before moving on.  Values at and after
// exhaustion stay 0.
std::vector<std::pair<Nat, Ordinal>> ks_trace(const Ordinal& mu, const FinSet& a,
                                              std::uint64_t fs_budget = 1'000'000);

// The splitting witness u = h^A_alpha(min A): {a <= u} is alpha-large and
// {u <= a} is beta-large whenever A is (beta (+) alpha)-large.
Nat split_point(const FinSet& a, const Ordinal& alpha, const Ordinal& beta,
                const HardyLimits& limits = {});

// For alpha-small B, the set C of consecutive naturals past max B that makes
// B u C exactly alpha-large.
FinSet extend_to_exactly_large(const FinSet& b, const Ordinal& alpha,
                               const HardyLimits& limits = {});

}  // namespace ordlab
