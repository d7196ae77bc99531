#include "ordlab/fundamental.hpp"

#include <cassert>

namespace ordlab {

namespace {

// eps_m[n]: tow_n(eps_{m-1}) for m >= 0, plain n at the omega level.
Ordinal eps_step(int m, const Nat& n) {
  if (m >= 0) return tow_ord(n, Ordinal::eps(m - 1));
  return Ordinal(n);
}

}  // namespace

Ordinal fs(const Ordinal& lam, const Nat& n) {
  if (n < 1) throw domain_error("fs: index must be >= 1");
  if (classify(lam) != OrdKind::Limit) throw domain_error("fs: not a limit ordinal");
  int m = lam.node_level();
  auto ts = lam.terms();
  if (ts.size() > 1) {
    // additive form: only the last term descends
    Ordinal tail = fs(make_level(m, {ts.back()}), n);
    std::vector<Term> out(ts.begin(), ts.end() - 1);
    if (!tail.is_zero()) {
      if (!tail.is_finite() && tail.node_level() == m)
        out.insert(out.end(), tail.terms().begin(), tail.terms().end());
      else
        out.push_back(Term{Ordinal(0), tail});
    }
    return make_level(m, std::move(out));
  }
  const Ordinal& e = ts[0].exponent;
  const Ordinal& xi = ts[0].coefficient;
  if (is_limit(xi)) return make_level(m, {Term{e, fs(xi, n)}});
  if (!(xi == Ordinal(1))) {
    // eps_m^e*(x+1): peel one copy and descend it
    Ordinal peeled = fs(make_level(m, {Term{e, Ordinal(1)}}), n);
    std::vector<Term> out{Term{e, pred(xi)}};
    if (!peeled.is_finite() && peeled.node_level() == m)
      out.insert(out.end(), peeled.terms().begin(), peeled.terms().end());
    else
      out.push_back(Term{Ordinal(0), peeled});
    return make_level(m, std::move(out));
  }
  // lam = eps_m^e
  if (e == Ordinal(1)) return eps_step(m, n);
  if (is_successor(e)) return make_level(m, {Term{pred(e), eps_step(m, n)}});
  return make_level(m, {Term{fs(e, n), Ordinal(1)}});
}

Ordinal step_down(const Ordinal& a, const Nat& n) {
  switch (classify(a)) {
    case OrdKind::Zero: throw domain_error("step_down: zero has no step");
    case OrdKind::Successor: return pred(a);
    case OrdKind::Limit: return fs(a, n);
  }
  assert(false);
  return Ordinal();
}

ReachResult reaches(const Ordinal& beta, const Ordinal& alpha, const Nat& n,
                    std::uint64_t budget, bool record_chain) {
  ReachResult r;
  r.chain.start = beta;
  r.chain.index = n;
  if (record_chain) r.chain.steps.push_back(beta);
  Ordinal cur = beta;
  if (cur == alpha) {
    r.status = ReachStatus::Yes;
    return r;
  }
  while (budget-- > 0) {
    if (compare(cur, alpha) == std::strong_ordering::less || cur.is_zero()) {
      r.status = ReachStatus::No;
      return r;
    }
    cur = step_down(cur, n);
    if (record_chain) r.chain.steps.push_back(cur);
    if (cur == alpha) {
      r.status = ReachStatus::Yes;
      return r;
    }
  }
  r.status = ReachStatus::BudgetExceeded;
  return r;
}

}  // namespace ordlab
