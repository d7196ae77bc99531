#include "ordlab/ordinal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

namespace ordlab {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_nat(const Nat& n) {
  std::size_t h = 0x243f6a8885a308d3ULL;
  Nat tmp = n;
  while (tmp > 0) {
    h = hash_combine(h, static_cast<std::size_t>(static_cast<std::uint64_t>(tmp & 0xffffffffffffffffULL)));
    tmp >>= 64;
  }
  return h;
}

std::strong_ordering cmp_nat(const Nat& a, const Nat& b) {
  if (a < b) return std::strong_ordering::less;
  if (a > b) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace

Ordinal::Ordinal(int n) {
  if (n < 0) throw domain_error("Ordinal: negative value");
  nat_ = n;
}

std::size_t Ordinal::hash() const {
  if (!node_) return hash_nat(nat_);
  return node_->hash;
}

bool Ordinal::operator==(const Ordinal& other) const {
  if (node_ == other.node_) return node_ ? true : nat_ == other.nat_;
  if (!node_ || !other.node_) return false;
  if (node_->hash != other.node_->hash) return false;
  if (node_->level != other.node_->level) return false;
  if (node_->terms.size() != other.node_->terms.size()) return false;
  for (std::size_t i = 0; i < node_->terms.size(); ++i) {
    if (!(node_->terms[i].exponent == other.node_->terms[i].exponent)) return false;
    if (!(node_->terms[i].coefficient == other.node_->terms[i].coefficient)) return false;
  }
  return true;
}

std::strong_ordering Ordinal::operator<=>(const Ordinal& other) const {
  return compare(*this, other);
}

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_finite() && b.is_finite()) return cmp_nat(a.nat_value(), b.nat_value());
  if (a.is_finite()) return std::strong_ordering::less;
  if (b.is_finite()) return std::strong_ordering::greater;
  // Canonical levels: a lower-level operand sits below eps_{level} <= other.
  if (a.node_level() != b.node_level())
    return a.node_level() <=> b.node_level();
  if (a == b) return std::strong_ordering::equal;
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto ce = compare(ta[i].exponent, tb[i].exponent);
    if (ce != 0) return ce;
    auto cc = compare(ta[i].coefficient, tb[i].coefficient);
    if (cc != 0) return cc;
  }
  return ta.size() <=> tb.size();
}

Ordinal make_level(int level, std::vector<Term> terms) {
  if (terms.empty()) return Ordinal();
  if (level < -1) throw domain_error("make_level: level below -1");
  if (terms.size() == 1 && terms[0].exponent.is_zero()) return terms[0].coefficient;
  assert(!terms.front().exponent.is_zero());
  std::size_t h = hash_combine(0x452821e638d01377ULL, static_cast<std::size_t>(level + 1));
  for (const Term& t : terms) {
    h = hash_combine(h, t.exponent.hash());
    h = hash_combine(h, t.coefficient.hash());
  }
  auto node = std::make_shared<Ordinal::Node>();
  node->level = level;
  node->terms = std::move(terms);
  node->hash = h;
  Ordinal out;
  out.node_ = std::move(node);
  return out;
}

Ordinal Ordinal::omega() {
  static const Ordinal w = make_level(-1, {Term{Ordinal(1), Ordinal(1)}});
  return w;
}

Ordinal Ordinal::eps(int m) {
  if (m < -1) throw domain_error("eps: level below -1");
  if (m == -1) return omega();
  static std::vector<Ordinal> cache;
  if (m < static_cast<int>(cache.size())) return cache[m];
  for (int i = static_cast<int>(cache.size()); i <= m; ++i)
    cache.push_back(make_level(i, {Term{Ordinal(1), Ordinal(1)}}));
  return cache[m];
}

OrdKind classify(const Ordinal& a) {
  if (a.is_zero()) return OrdKind::Zero;
  if (a.is_finite()) return OrdKind::Successor;
  const Term& t = a.last();
  if (!t.exponent.is_zero()) return OrdKind::Limit;
  return classify(t.coefficient);
}

bool is_limit(const Ordinal& a) { return classify(a) == OrdKind::Limit; }
bool is_successor(const Ordinal& a) { return classify(a) == OrdKind::Successor; }

Ordinal pred(const Ordinal& a) {
  if (classify(a) != OrdKind::Successor) throw domain_error("pred: not a successor");
  if (a.is_finite()) return Ordinal(a.nat_value() - 1);
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  Ordinal tail = pred(terms.back().coefficient);
  if (tail.is_zero())
    terms.pop_back();
  else
    terms.back().coefficient = tail;
  return make_level(a.node_level(), std::move(terms));
}

namespace {

// Normal form of a to base eps_level, as a term list.  Requires
// level >= a.base_level(); a == 0 yields the empty list.
std::vector<Term> base_terms(const Ordinal& a, int level) {
  if (a.is_zero()) return {};
  if (a.base_level() == level && !a.is_finite())
    return {a.terms().begin(), a.terms().end()};
  assert(a.base_level() < level || a.is_finite());
  if (a.is_finite() && level == -1) return {Term{Ordinal(0), a}};
  return {Term{Ordinal(0), a}};
}

}  // namespace

Ordinal add(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_finite() && b.is_finite()) return Ordinal(a.nat_value() + b.nat_value());
  int level = std::max(a.base_level(), b.base_level());
  std::vector<Term> ta = base_terms(a, level);
  std::vector<Term> tb = base_terms(b, level);
  const Ordinal& cut = tb.front().exponent;
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0;
  while (i < ta.size() && compare(ta[i].exponent, cut) == std::strong_ordering::greater)
    out.push_back(ta[i++]);
  if (i < ta.size() && ta[i].exponent == cut) {
    // omega^p*x + (omega^p*y + rest) = omega^p*(x+y) + rest
    tb.front().coefficient = add(ta[i].coefficient, tb.front().coefficient);
  }
  out.insert(out.end(), tb.begin(), tb.end());
  return make_level(level, std::move(out));
}

Ordinal natural_sum(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_finite() && b.is_finite()) return Ordinal(a.nat_value() + b.nat_value());
  int level = std::max(a.base_level(), b.base_level());
  std::vector<Term> ta = base_terms(a, level);
  std::vector<Term> tb = base_terms(b, level);
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (i == ta.size()) { out.push_back(tb[j++]); continue; }
    if (j == tb.size()) { out.push_back(ta[i++]); continue; }
    auto c = compare(ta[i].exponent, tb[j].exponent);
    if (c == std::strong_ordering::greater) {
      out.push_back(ta[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(tb[j++]);
    } else {
      out.push_back(Term{ta[i].exponent, natural_sum(ta[i].coefficient, tb[j].coefficient)});
      ++i; ++j;
    }
  }
  return make_level(level, std::move(out));
}

Ordinal omega_pow(const Ordinal& g) {
  if (g.is_zero()) return Ordinal(1);
  if (g.base_level() == -1) return make_level(-1, {Term{g, Ordinal(1)}});
  // g = eps_M * delta + rho with rho < eps_M, so omega^g = eps_M^delta * omega^rho.
  int m = g.node_level();
  std::vector<Term> delta_terms;
  Ordinal rho;
  for (const Term& t : g.terms()) {
    if (t.exponent.is_zero()) {
      rho = t.coefficient;
    } else if (t.exponent.is_finite()) {
      // eps_M^k = eps_M * eps_M^{k-1} for finite k >= 1
      delta_terms.push_back(Term{Ordinal(t.exponent.nat_value() - 1), t.coefficient});
    } else {
      // 1 + e = e for infinite e
      delta_terms.push_back(t);
    }
  }
  Ordinal delta = make_level(m, std::move(delta_terms));
  return make_level(m, {Term{delta, omega_pow(rho)}});
}

Ordinal eps_pow(int m, const Ordinal& e) {
  if (m < -1) throw domain_error("eps_pow: level below -1");
  if (e.is_zero()) return Ordinal(1);
  if (m == -1) return omega_pow(e);
  if (e.base_level() <= m - 1 || (!e.is_finite() && e.node_level() <= m))
    return make_level(m, {Term{e, Ordinal(1)}});
  // e >= eps_{m+1}: collapse through the base-omega fixpoint identity.
  return omega_pow(mul(Ordinal::eps(m), e));
}

std::vector<OmegaTerm> omega_view(const Ordinal& a) {
  if (a.is_zero()) return {};
  if (a.is_finite()) return {OmegaTerm{Ordinal(0), a.nat_value()}};
  int m = a.node_level();
  if (m == -1) {
    std::vector<OmegaTerm> out;
    out.reserve(a.terms().size());
    for (const Term& t : a.terms())
      out.push_back(OmegaTerm{t.exponent, t.coefficient.nat_value()});
    return out;
  }
  // omega^{eps_m} = eps_m grounds the recursion.
  if (a == Ordinal::eps(m)) return {OmegaTerm{a, 1}};
  std::vector<OmegaTerm> out;
  for (const Term& t : a.terms()) {
    Ordinal head = mul(Ordinal::eps(m), t.exponent);  // the omega-exponent of eps_m^nu
    for (const OmegaTerm& w : omega_view(t.coefficient))
      out.push_back(OmegaTerm{add(head, w.exponent), w.coefficient});
  }
  return out;
}

namespace {

// a * n for finite n >= 1: the leading coefficient scales, the tail stays.
Ordinal mul_nat(const Ordinal& a, const Nat& n) {
  if (a.is_zero() || n == 0) return Ordinal();
  if (a.is_finite()) return Ordinal(a.nat_value() * n);
  if (n == 1) return a;
  std::vector<Term> terms(a.terms().begin(), a.terms().end());
  terms[0].coefficient = mul_nat(terms[0].coefficient, n);
  return make_level(a.node_level(), std::move(terms));
}

}  // namespace

Ordinal from_omega_view(std::span<const OmegaTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw domain_error("from_omega_view: zero coefficient");
    if (i + 1 < terms.size() &&
        compare(terms[i].exponent, terms[i + 1].exponent) != std::strong_ordering::greater)
      throw domain_error("from_omega_view: exponents not strictly decreasing");
  }
  Ordinal acc;
  for (const OmegaTerm& t : terms)
    acc = add(acc, mul_nat(omega_pow(t.exponent), t.coefficient));
  return acc;
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal();
  if (a.is_finite() && b.is_finite()) return Ordinal(a.nat_value() * b.nat_value());
  std::vector<OmegaTerm> av = omega_view(a);
  std::vector<OmegaTerm> bv = omega_view(b);
  const Ordinal& p0 = av.front().exponent;
  std::vector<OmegaTerm> out;
  for (const OmegaTerm& t : bv) {
    if (!t.exponent.is_zero()) {
      out.push_back(OmegaTerm{add(p0, t.exponent), t.coefficient});
    } else {
      // a * n: leading coefficient scales, tail of a survives once.
      out.push_back(OmegaTerm{p0, av.front().coefficient * t.coefficient});
      out.insert(out.end(), av.begin() + 1, av.end());
    }
  }
  return from_omega_view(out);
}

Ordinal tow_ord(const Nat& n, const Ordinal& base) {
  if (n < 1) throw domain_error("tow_ord: height must be >= 1");
  if (n > kMaxTowerHeight)
    throw feasibility_error("tow_ord: tower height " + n.str() + " exceeds cap");
  bool ok = base == Ordinal::omega();
  if (!ok && !base.is_finite() && base.terms().size() == 1 &&
      base.leading().exponent == Ordinal(1) && base.leading().coefficient == Ordinal(1))
    ok = true;
  if (!ok) throw domain_error("tow_ord: base must be omega or an epsilon number");
  int m = base.node_level();
  Ordinal t = base;
  for (Nat i = 1; i < n; ++i) t = make_level(m, {Term{t, Ordinal(1)}});
  return t;
}

std::pair<int, int> level_and_height(const Ordinal& a) {
  if (a.is_zero()) throw domain_error("level_and_height: undefined for zero");
  if (a.is_finite()) return {0, 1};
  int m = a.node_level();
  // h(a) = 1 + (tower depth of the leading exponent over eps_m).
  int h = 2;
  Ordinal e = a.leading().exponent;
  while (!e.is_finite() && e.node_level() == m) {
    ++h;
    e = e.leading().exponent;
  }
  return {m + 1, h};
}

std::size_t term_count(const Ordinal& a) {
  if (a.is_finite()) return 1;
  std::size_t n = 0;
  for (const Term& t : a.terms())
    n += 1 + term_count(t.exponent) + term_count(t.coefficient);
  return n;
}

Nat psn(const Ordinal& a) {
  if (a.is_finite()) return a.nat_value();
  Nat best = level_and_height(a).second;
  for (const Term& t : a.terms()) {
    Nat pe = psn(t.exponent);
    if (pe > best) best = pe;
    Nat pc = psn(t.coefficient);
    if (pc > best) best = pc;
  }
  return best;
}

std::vector<std::pair<Ordinal, Ordinal>> to_base(const Ordinal& a, int m) {
  if (m < -1) throw domain_error("to_base: level below -1");
  if (a.is_zero()) return {};
  if (m < a.base_level())
    throw domain_error("to_base: level below canonical base l(a)-1");
  std::vector<std::pair<Ordinal, Ordinal>> out;
  if (m == a.base_level() && !a.is_finite()) {
    for (const Term& t : a.terms()) out.emplace_back(t.exponent, t.coefficient);
  } else if (a.is_finite() && m == -1) {
    out.emplace_back(Ordinal(0), a);
  } else {
    out.emplace_back(Ordinal(0), a);  // a = eps_m^0 * a
  }
  return out;
}

Ordinal normalize(const std::vector<RawTerm>& summands) {
  Ordinal acc;
  for (const RawTerm& s : summands) {
    if (s.base_level < -1) throw domain_error("normalize: base level below -1");
    if (s.coefficient.is_zero()) throw domain_error("normalize: zero coefficient");
    acc = add(acc, mul(eps_pow(s.base_level, s.exponent), s.coefficient));
  }
  return acc;
}

std::vector<RawTerm> decompose(const Ordinal& a) {
  if (a.is_zero()) return {};
  if (a.is_finite()) return {RawTerm{-1, Ordinal(0), a}};
  std::vector<RawTerm> out;
  for (const Term& t : a.terms())
    out.push_back(RawTerm{a.node_level(), t.exponent, t.coefficient});
  return out;
}

}  // namespace ordlab
