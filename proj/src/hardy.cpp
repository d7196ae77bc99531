#include "ordlab/hardy.hpp"

#include <algorithm>
#include <sstream>

namespace ordlab {

FinSet::FinSet(std::vector<Nat> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) throw domain_error("FinSet: empty");
  for (std::size_t i = 0; i + 1 < elems_.size(); ++i)
    if (!(elems_[i] < elems_[i + 1]))
      throw domain_error("FinSet: elements not strictly ascending");
  if (elems_.front() < 0) throw domain_error("FinSet: negative element");
}

FinSet FinSet::interval(const Nat& lo, const Nat& hi) {
  if (lo > hi) throw domain_error("FinSet::interval: empty range");
  std::vector<Nat> v;
  for (Nat x = lo; x <= hi; ++x) v.push_back(x);
  return FinSet(std::move(v));
}

FinSet FinSet::parse(const std::string& comma_separated) {
  std::vector<Nat> v;
  std::string item;
  std::istringstream in(comma_separated);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    v.emplace_back(item);
  }
  return FinSet(std::move(v));
}

bool FinSet::contains(const Nat& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::optional<Nat> FinSet::next_after(const Nat& x) const {
  auto it = std::upper_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end()) return std::nullopt;
  return *it;
}

FinSet FinSet::prefix_upto(const Nat& u) const {
  std::vector<Nat> v;
  for (const Nat& x : elems_)
    if (x <= u) v.push_back(x);
  return FinSet(std::move(v));
}

FinSet FinSet::suffix_from(const Nat& u) const {
  std::vector<Nat> v;
  for (const Nat& x : elems_)
    if (x >= u) v.push_back(x);
  return FinSet(std::move(v));
}

FinSet FinSet::without_max() const {
  if (elems_.size() < 2) throw domain_error("FinSet: without_max on singleton");
  return FinSet(std::vector<Nat>(elems_.begin(), elems_.end() - 1));
}

HardyOutcome hardy_run(const Ordinal& alpha, const Nat& x, const Carrier& carrier,
                       const HardyLimits& limits, const StepObserver& observe) {
  if (x < 1) throw domain_error("hardy: start position must be positive");
  if (carrier.set && !carrier.set->contains(x))
    throw domain_error("hardy: start position not in the carrier set");
  Ordinal ord = alpha;
  Nat pos = x;
  std::uint64_t steps = 0;
  HardyOutcome out;
  while (!ord.is_zero()) {
    bool overgrown =
        (steps % 256 == 0) && steps > 0 && term_count(ord) > limits.max_terms;
    if (steps >= limits.max_steps || overgrown ||
        out.successor_steps >= limits.max_successor_steps) {
      out.status = HardyStatus::BudgetExceeded;
      out.position = pos;
      out.remaining = ord;
      return out;
    }
    ++steps;
    if (is_limit(ord)) {
      if (observe) observe(HardyStep{ord, pos, StepKind::LimitStep});
      ord = fs(ord, pos);
    } else {
      if (observe) observe(HardyStep{ord, pos, StepKind::SuccessorStep});
      Nat next;
      if (carrier.set) {
        auto n = carrier.set->next_after(pos);
        if (!n) {
          out.status = HardyStatus::Undefined;
          out.position = pos;
          out.remaining = ord;
          return out;
        }
        next = *n;
      } else {
        next = pos + 1;
      }
      ord = pred(ord);
      pos = next;
      ++out.successor_steps;
    }
  }
  out.status = HardyStatus::Value;
  out.value = pos;
  out.position = pos;
  return out;
}

HardyTrace hardy_eval(const Ordinal& alpha, const Nat& x, const Carrier& carrier,
                      const HardyLimits& limits) {
  HardyTrace trace;
  trace.outcome = hardy_run(alpha, x, carrier, limits,
                            [&](const HardyStep& s) { trace.entries.push_back(s); });
  return trace;
}

LargenessResult largeness(const FinSet& a, const Ordinal& alpha, const HardyLimits& limits) {
  HardyOutcome out = hardy_run(alpha, a.min(), Carrier::of(a), limits);
  switch (out.status) {
    case HardyStatus::Undefined: return {Largeness::Small, Nat()};
    case HardyStatus::BudgetExceeded:
      throw feasibility_error("largeness: step budget exceeded");
    case HardyStatus::Value: break;
  }
  if (out.value == a.max()) return {Largeness::ExactlyLarge, out.value};
  return {Largeness::ProperlyLarge, out.value};
}

bool is_large(const FinSet& a, const Ordinal& alpha, const HardyLimits& limits) {
  return largeness(a, alpha, limits).kind != Largeness::Small;
}

bool at_most_large(const FinSet& a, const Ordinal& alpha, const HardyLimits& limits) {
  return !is_large(a, add(alpha, Ordinal(1)), limits);
}

std::vector<std::pair<Nat, Ordinal>> ks_trace(const Ordinal& mu, const FinSet& a,
                                              std::uint64_t fs_budget) {
  std::vector<std::pair<Nat, Ordinal>> out;
  out.reserve(a.size());
  Ordinal nu = mu;
  std::uint64_t steps = 0;
  for (const Nat& elem : a.elements()) {
    while (is_limit(nu)) {
      if (steps++ >= fs_budget)
        throw feasibility_error("ks_trace: fs budget exceeded at element " + elem.str());
      // descents that will never finish also grow without bound; catch them
      // by size long before the step budget burns real time
      if (steps % 256 == 0 && term_count(nu) > 100'000)
        throw feasibility_error("ks_trace: descent ordinal grew past 100000 terms at element " +
                                elem.str());
      nu = fs(nu, elem);
    }
    out.emplace_back(elem, nu);
    if (!nu.is_zero()) nu = pred(nu);
  }
  return out;
}

Nat split_point(const FinSet& a, const Ordinal& alpha, const Ordinal& beta,
                const HardyLimits& limits) {
  if (!is_large(a, natural_sum(beta, alpha), limits))
    throw domain_error("split_point: A is not (beta (+) alpha)-large");
  HardyOutcome out = hardy_run(alpha, a.min(), Carrier::of(a), limits);
  if (out.status != HardyStatus::Value)
    throw domain_error("split_point: h^A_alpha(min A) undefined");
  return out.value;
}

FinSet extend_to_exactly_large(const FinSet& b, const Ordinal& alpha,
                               const HardyLimits& limits) {
  if (alpha.is_zero())
    throw domain_error("extend: every set is 0-large");
  if (is_large(b, alpha, limits))
    throw domain_error("extend: B is already alpha-large");
  // Continue the Hardy run past max B through consecutive naturals; the
  // position where the ordinal hits zero is max(B u C).
  Ordinal ord = alpha;
  Nat pos = b.min();
  std::uint64_t steps = 0;
  while (!ord.is_zero()) {
    if (steps++ >= limits.max_steps)
      throw feasibility_error("extend: step budget exceeded");
    if (is_limit(ord)) {
      ord = fs(ord, pos);
    } else {
      ord = pred(ord);
      if (pos < b.max())
        pos = *b.next_after(pos);
      else
        pos = pos + 1;
    }
  }
  // B is alpha-small, so the run left B before terminating.
  return FinSet::interval(b.max() + 1, pos);
}

}  // namespace ordlab
