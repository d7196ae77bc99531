#include "ordlab/estimation.hpp"

#include <map>

namespace ordlab {

namespace {

// Memoized per top-level call; the eps_m clause cascades through
// GO(a, tow_a(eps_{m-1})) and revisits the same powers many times.
struct GoEval {
  Nat a;
  std::map<Ordinal, Ordinal> memo;

  Ordinal eval(const Ordinal& alpha_in) {
    if (alpha_in.is_zero()) throw domain_error("go: alpha must be >= 1");
    // Every candidate with psn <= a has height <= a, so candidates below
    // alpha and below tow_a(eps_{l-1}) coincide; clamping keeps the
    // recursion inside ordinals of height <= a and hence psn(GO) <= a.
    Ordinal alpha = alpha_in;
    if (!alpha.is_finite()) {
      auto [l, h] = level_and_height(alpha);
      if (Nat(h) > a) alpha = tow_ord(a, Ordinal::eps(l - 1));
    }
    auto hit = memo.find(alpha);
    if (hit != memo.end()) return hit->second;
    Ordinal result = compute(alpha);
    memo.emplace(alpha, result);
    return result;
  }

  Ordinal compute(const Ordinal& alpha) {
    if (alpha == Ordinal(1)) return Ordinal(0);
    if (is_successor(alpha)) {
      Ordinal p = pred(alpha);
      return psn(p) <= a ? p : eval(p);
    }
    if (alpha == Ordinal::omega()) return Ordinal(a);
    int m = alpha.node_level();
    auto ts = alpha.terms();
    if (ts.size() == 1) {
      const Ordinal& e = ts[0].exponent;
      const Ordinal& xi = ts[0].coefficient;
      if (xi == Ordinal(1)) {
        if (e == Ordinal(1))  // alpha = eps_m, m >= 0 (omega handled above)
          return eval(tow_ord(a, Ordinal::eps(m - 1)));
        return power_clause(m, e);
      }
      if (is_limit(xi)) {
        // alpha = eps_m^e * psi, psi limit
        if (psn(e) <= a)
          return add(mul(eps_pow(m, e), eval(xi)), eval(eps_pow(m, e)));
        return power_clause(m, e);
      }
      // successor coefficient: alpha = xi' + eps_m^e with xi' = eps_m^e*(xi-1)
      Ordinal xi_prime = make_level(m, {Term{e, pred(xi)}});
      return tail_successor_clause(m, e, xi_prime);
    }
    // additive form: xi + eps_m^e * psi in short normal form, xi != 0
    Ordinal xi = make_level(m, std::vector<Term>(ts.begin(), ts.end() - 1));
    const Ordinal& e = ts.back().exponent;
    const Ordinal& psi = ts.back().coefficient;
    if (is_limit(psi)) {
      Ordinal last = make_level(m, {ts.back()});
      return psn(xi) <= a ? add(xi, eval(last)) : eval(xi);
    }
    // psi = phi+1: regroup as xi' + eps_m^e, xi' = xi + eps_m^e*phi
    Ordinal phi = pred(psi);
    Ordinal xi_prime = xi;
    if (!phi.is_zero()) {
      std::vector<Term> terms(ts.begin(), ts.end() - 1);
      terms.push_back(Term{e, phi});
      xi_prime = make_level(m, std::move(terms));
    }
    return tail_successor_clause(m, e, xi_prime);
  }

  // GO(a, eps_m^e) for e > 1:
  //   eps_m^{GO(a,e)} * GO(a, eps_m) + GO(a, eps_m^{GO(a,e)})
  Ordinal power_clause(int m, const Ordinal& e) {
    Ordinal g = eval(e);
    Ordinal c = m >= 0 ? eval(Ordinal::eps(m)) : Ordinal(a);
    Ordinal head = eps_pow(m, g);
    return add(mul(head, c), eval(head));
  }

  // GO(a, xi' + eps_m^e) with xi' != 0.
  Ordinal tail_successor_clause(int m, const Ordinal& e, const Ordinal& xi_prime) {
    if (psn(xi_prime) <= a) return add(xi_prime, eval(eps_pow(m, e)));
    return eval(xi_prime);
  }
};

}  // namespace

Ordinal go(const Nat& a, const Ordinal& alpha) {
  if (a < 1) throw domain_error("go: a must be >= 1");
  GoEval ev{a, {}};
  return ev.eval(alpha);
}

Ordinal f_explicit(const Ordinal& alpha) {
  if (alpha.is_zero()) return Ordinal();
  std::vector<OmegaTerm> view = omega_view(alpha);
  std::vector<OmegaTerm> out;
  Nat infinite_copies = 0;
  std::size_t i = 0;
  for (; i < view.size() && !view[i].exponent.is_finite(); ++i) {
    out.push_back(OmegaTerm{view[i].exponent, view[i].coefficient * 2});
    infinite_copies += view[i].coefficient;
  }
  if (i < view.size()) {
    // finite-exponent block omega^n*m_n + ...: coefficient at omega^j
    // becomes the suffix sum m_n + ... + m_j, solid down to omega^0
    Nat n = view[i].exponent.nat_value();
    Nat running = 0;
    std::size_t j = i;
    for (Nat k = n;; --k) {
      if (j < view.size() && view[j].exponent.nat_value() == k) {
        running += view[j].coefficient;
        ++j;
      }
      Nat coeff = running;
      if (k == 0) coeff += infinite_copies;
      if (coeff > 0) out.push_back(OmegaTerm{Ordinal(k), coeff});
      if (k == 0) break;
    }
  } else if (infinite_copies > 0) {
    out.push_back(OmegaTerm{Ordinal(0), infinite_copies});
  }
  return from_omega_view(out);
}

namespace {

// F(omega^g): clauses 4 and 5.
Ordinal f_single_power(const Ordinal& g) {
  std::vector<OmegaTerm> view;
  if (g.is_finite()) {
    for (Nat k = g.nat_value();; --k) {
      view.push_back(OmegaTerm{Ordinal(k), 1});
      if (k == 0) break;
    }
  } else {
    view.push_back(OmegaTerm{g, 2});
    view.push_back(OmegaTerm{Ordinal(0), 1});
  }
  return from_omega_view(view);
}

// The natural sum of c identical copies: every base-omega coefficient
// scales by c.
Ordinal nat_scale(const Ordinal& a, const Nat& c) {
  if (c == 1) return a;
  std::vector<OmegaTerm> view = omega_view(a);
  for (OmegaTerm& t : view) t.coefficient *= c;
  return from_omega_view(view);
}

}  // namespace

Ordinal f_recursive(const Ordinal& alpha) {
  // alpha splits by >> into its omega-power copies; clause 3 turns F of the
  // sum into the natural sum of the per-power values.
  Ordinal acc;
  for (const OmegaTerm& t : omega_view(alpha))
    acc = natural_sum(acc, nat_scale(f_single_power(t.exponent), t.coefficient));
  return acc;
}

bool much_greater(const Ordinal& beta, const Ordinal& alpha) {
  if (alpha.is_zero()) return true;
  if (beta.is_zero()) return false;
  int m = beta.base_level();
  if (alpha.base_level() > m) return false;
  Ordinal least_beta = beta.is_finite() ? Ordinal(0) : beta.last().exponent;
  auto alpha_terms = to_base(alpha, m);
  const Ordinal& greatest_alpha = alpha_terms.front().first;
  return compare(least_beta, greatest_alpha) != std::strong_ordering::less;
}

const Ordinal& DecreasingMap::at(const Nat& x) const {
  const auto& elems = domain.elements();
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == x) return values[i];
  throw domain_error("DecreasingMap: element not in domain");
}

EstimationReport check_estimation(const FinSet& a, const DecreasingMap& g,
                                  const Ordinal& beta, const Ordinal& alpha,
                                  const HardyLimits& limits) {
  EstimationReport rep;
  rep.f_alpha = f_explicit(alpha);
  auto violation = [&](const std::string& what) {
    rep.verdict = EstimationVerdict::HypothesisViolation;
    rep.detail = what;
    return rep;
  };
  if (!(g.domain == a)) return violation("G is not defined on A");
  if (g.values.size() != a.size()) return violation("G values misaligned");
  if (beta.is_zero()) {
    if (a.min() < 1) return violation("min A must be positive");
  } else {
    if (a.min() <= 1) return violation("min A must exceed 1");
    if (!much_greater(beta, alpha)) return violation("beta >> alpha fails");
  }
  Ordinal cap = add(beta, alpha);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    if (compare(g.values[i], cap) == std::strong_ordering::greater)
      return violation("G value above beta+alpha");
    if (i + 1 < g.values.size() &&
        compare(g.values[i], g.values[i + 1]) != std::strong_ordering::greater)
      return violation("G is not strictly decreasing");
    if (psn(g.values[i]) > a.elements()[i])
      return violation("psn(G(x)) exceeds x");
  }

  std::vector<Nat> checked;
  if (beta.is_zero()) {
    checked = a.elements();
  } else {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (compare(g.values[i], beta) != std::strong_ordering::less)
        checked.push_back(a.elements()[i]);
    if (checked.empty()) {
      rep.verdict = EstimationVerdict::Pass;
      rep.detail = "no element has G(x) >= beta";
      return rep;
    }
    rep.cutoff = checked.back();
  }

  FinSet d{std::move(checked)};
  rep.witness = hardy_run(add(rep.f_alpha, Ordinal(1)), d.min(), Carrier::of(d), limits);
  switch (rep.witness.status) {
    case HardyStatus::Undefined:
      rep.verdict = EstimationVerdict::Pass;
      return rep;
    case HardyStatus::Value:
      rep.verdict = EstimationVerdict::Fail;
      rep.detail = "set is (F(alpha)+1)-large, value " + rep.witness.value.str();
      return rep;
    case HardyStatus::BudgetExceeded:
      throw feasibility_error("check_estimation: step budget exceeded");
  }
  return rep;
}

}  // namespace ordlab
