#include "ordlab/enumerate.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

namespace ordlab {

Nat nmk_formula(const Nat& a, const Nat& k, int m, std::uint64_t max_bits) {
  if (k < 1) throw domain_error("nmk_formula: k must be >= 1");
  if (m < -1) throw domain_error("nmk_formula: m must be >= -1");
  if (a < 1) throw domain_error("nmk_formula: a must be >= 1");
  Nat kk = k > a ? a : k;  // N^m_k(a) = N^m_a(a) for k > a
  Nat inner = a + 1;
  for (int i = 0; i <= m; ++i) inner = nat_tow(a, inner, max_bits);
  return nat_tow(kk, inner, max_bits);
}

std::optional<std::pair<int, int>> tower_shape(const Ordinal& bound) {
  if (bound.is_finite()) return std::nullopt;
  int m = bound.node_level();
  int k = 0;
  Ordinal cur = bound;
  while (true) {
    if (cur.is_finite()) return std::nullopt;
    if (cur.node_level() != m || cur.terms().size() != 1 ||
        !(cur.leading().coefficient == Ordinal(1)))
      return std::nullopt;
    ++k;
    const Ordinal& e = cur.leading().exponent;
    if (e == Ordinal(1)) return std::make_pair(m, k);  // reached eps_m
    cur = e;
  }
}

namespace {

class Enumerator {
 public:
  Enumerator(Nat a, std::uint64_t cap) : a_(std::move(a)), cap_(cap) {}

  const std::vector<Ordinal>& below(const Ordinal& bound) {
    auto hit = memo_.find(bound);
    if (hit != memo_.end()) return *hit->second;
    auto result = std::make_shared<std::vector<Ordinal>>(generate(bound));
    std::sort(result->begin(), result->end(),
              [](const Ordinal& x, const Ordinal& y) {
                return compare(x, y) == std::strong_ordering::less;
              });
    return *memo_.emplace(bound, std::move(result)).first->second;
  }

 private:
  void charge(std::size_t n) {
    produced_ += n;
    if (produced_ > cap_)
      throw feasibility_error("enum: cap of " + std::to_string(cap_) +
                              " materialized ordinals exceeded");
  }

  // Tower depth of a leading exponent e over eps_m: least g >= 1 with
  // e < tow_g(eps_m).  h(eps_m^e * ...) = 1 + g.
  int exp_depth(const Ordinal& e, int m) const {
    int g = 1;
    Ordinal cur = e;
    while (!cur.is_finite() && cur.node_level() == m) {
      ++g;
      cur = cur.leading().exponent;
    }
    return g;
  }

  // A term eps_m^e at the head keeps psn <= a iff psn(e) <= a and the
  // height 1 + depth(e) stays <= a.
  bool valid_leading_exp(const Ordinal& e, int m) const {
    if (psn(e) > a_) return false;
    return Nat(exp_depth(e, m) + 1) <= a_;
  }

  std::vector<Ordinal> generate(const Ordinal& bound) {
    std::vector<Ordinal> out;
    if (bound.is_zero()) return out;
    if (bound.is_finite()) {
      Nat top = bound.nat_value() - 1;
      if (top > a_) top = a_;
      charge(static_cast<std::size_t>(top) + 1);
      for (Nat v = 0; v <= top; ++v) out.push_back(Ordinal(v));
      return out;
    }
    int m = bound.node_level();
    // everything below eps_m
    const std::vector<Ordinal>& low = below_eps(m);
    charge(low.size());
    out = low;
    if (a_ < 2) return out;  // psn of any level-m ordinal is at least 2

    const Ordinal& b0 = bound.leading().exponent;
    const Ordinal& xi0 = bound.leading().coefficient;

    // leading exponent strictly below min(b0, tow_{a-1}(eps_m))
    Ordinal exp_cap = tow_ord(a_ - 1, Ordinal::eps(m));
    if (compare(b0, exp_cap) == std::strong_ordering::less) exp_cap = b0;
    const std::vector<Ordinal>& exps = below(exp_cap);
    const std::vector<Ordinal>& coeffs = below_eps(m);
    for (const Ordinal& e : exps) {
      if (e.is_zero()) continue;
      const std::vector<Ordinal>& tails = below(eps_pow(m, e));
      charge((coeffs.size() - 1) * tails.size());
      emit_with_leading(out, m, e, coeffs, tails);
    }

    // leading exponent exactly b0
    if (valid_leading_exp(b0, m)) {
      // recurse into eps_m^b0 only when a coefficient below xi0 exists,
      // otherwise below(eps_m) would recurse into itself
      const std::vector<Ordinal>& small_coeffs = below(xi0);
      if (small_coeffs.size() > 1) {
        const std::vector<Ordinal>& tails = below(eps_pow(m, b0));
        charge((small_coeffs.size() - 1) * tails.size());
        emit_with_leading(out, m, b0, small_coeffs, tails);
      }
      if (psn(xi0) <= a_) {
        // coefficient equal to the bound's: the remainder runs below the rest
        Ordinal rest = make_level(
            m, std::vector<Term>(bound.terms().begin() + 1, bound.terms().end()));
        const std::vector<Ordinal>& tails2 = below(rest);
        charge(tails2.size());
        for (const Ordinal& t : tails2)
          out.push_back(prepend(m, b0, xi0, t));
      }
    }
    return out;
  }

  // all eps_m^e * c + tail with c ranging over the given nonzero pool
  void emit_with_leading(std::vector<Ordinal>& out, int m, const Ordinal& e,
                         const std::vector<Ordinal>& coeff_pool,
                         const std::vector<Ordinal>& tails) {
    for (const Ordinal& c : coeff_pool) {
      if (c.is_zero()) continue;
      for (const Ordinal& t : tails) out.push_back(prepend(m, e, c, t));
    }
  }

  static Ordinal prepend(int m, const Ordinal& e, const Ordinal& c, const Ordinal& tail) {
    std::vector<Term> terms{Term{e, c}};
    if (!tail.is_zero()) {
      if (!tail.is_finite() && tail.node_level() == m)
        terms.insert(terms.end(), tail.terms().begin(), tail.terms().end());
      else
        terms.push_back(Term{Ordinal(0), tail});
    }
    return make_level(m, std::move(terms));
  }

  // {alpha < eps_m : psn <= a}; for psn <= a this equals everything below
  // tow_a(eps_{m-1}).
  const std::vector<Ordinal>& below_eps(int m) {
    if (m == -1) {
      auto hit = memo_.find(Ordinal::omega());
      if (hit != memo_.end()) return *hit->second;
      auto v = std::make_shared<std::vector<Ordinal>>();
      for (Nat x = 0; x <= a_; ++x) v->push_back(Ordinal(x));
      charge(v->size());
      return *memo_.emplace(Ordinal::omega(), std::move(v)).first->second;
    }
    if (a_ == 0) {
      static const std::vector<Ordinal> just_zero{Ordinal(0)};
      return just_zero;
    }
    return below(tow_ord(a_, Ordinal::eps(m - 1)));
  }

  Nat a_;
  std::uint64_t cap_;
  std::uint64_t produced_ = 0;
  std::unordered_map<Ordinal, std::shared_ptr<std::vector<Ordinal>>, OrdinalHash> memo_;
};

}  // namespace

std::vector<Ordinal> enum_psn_bounded(const Universe& u) {
  if (auto shape = tower_shape(u.bound)) {
    auto [m, k] = *shape;
    if (u.psn_cap >= 1) {
      Nat predicted;
      try {
        predicted = nmk_formula(u.psn_cap, k, m);
      } catch (const feasibility_error&) {
        throw feasibility_error("enum: predicted count is astronomically large");
      }
      if (predicted > u.cap)
        throw feasibility_error("enum: predicted count " + predicted.str() +
                                " exceeds cap " + std::to_string(u.cap));
    }
  }
  Enumerator en(u.psn_cap, u.cap);
  return en.below(u.bound);
}

}  // namespace ordlab
