#include "ordlab/ramsey.hpp"

#include <algorithm>

namespace ordlab {

Ordinal coeff_v(int m, const Ordinal& alpha, const Ordinal& delta) {
  for (const auto& [e, c] : to_base(alpha, m))
    if (e == delta) return c;
  return Ordinal(0);
}

Ordinal ld(int m, const Ordinal& alpha, const Ordinal& beta) {
  if (alpha == beta) throw domain_error("ld: equal arguments");
  auto ta = to_base(alpha, m);
  auto tb = to_base(beta, m);
  std::size_t i = 0, j = 0;
  while (i < ta.size() && j < tb.size()) {
    auto c = compare(ta[i].first, tb[j].first);
    if (c == std::strong_ordering::greater) return ta[i].first;
    if (c == std::strong_ordering::less) return tb[j].first;
    if (!(ta[i].second == tb[j].second)) return ta[i].first;
    ++i;
    ++j;
  }
  if (i < ta.size()) return ta[i].first;
  return tb[j].first;
}

int l3(int m, const Ordinal& a, const Ordinal& b, const Ordinal& c) {
  if (compare(a, b) != std::strong_ordering::greater ||
      compare(b, c) != std::strong_ordering::greater)
    throw domain_error("l3: triple not strictly descending");
  auto cmp = compare(ld(m, a, b), ld(m, b, c));
  if (cmp == std::strong_ordering::less) return 0;
  if (cmp == std::strong_ordering::equal) return 1;
  return 2;
}

namespace {

long pow3(int n) {
  long v = 1;
  while (n-- > 0) v *= 3;
  return v;
}

}  // namespace

ColorK lk_color(int m, int k, std::span<const Ordinal> tuple) {
  if (k < 3) throw domain_error("lk_color: k must be >= 3");
  if (static_cast<int>(tuple.size()) != k) throw domain_error("lk_color: tuple length != k");
  for (int i = 0; i + 1 < k; ++i)
    if (compare(tuple[i], tuple[i + 1]) != std::strong_ordering::greater)
      throw domain_error("lk_color: tuple not strictly descending");
  if (k == 3) return ColorK{3, l3(m, tuple[0], tuple[1], tuple[2])};
  long g = l3(m, tuple[0], tuple[1], tuple[2]);
  std::vector<Ordinal> deltas(k - 1);
  for (int i = 0; i + 1 < k; ++i) deltas[i] = ld(m, tuple[i], tuple[i + 1]);
  bool desc = true, asc = true;
  for (int i = 0; i + 1 < k - 1; ++i) {
    auto c = compare(deltas[i], deltas[i + 1]);
    if (c != std::strong_ordering::greater) desc = false;
    if (c != std::strong_ordering::less) asc = false;
  }
  long w = 0;
  if (desc) {
    w = lk_color(m, k - 1, deltas).value;
  } else if (asc) {
    std::reverse(deltas.begin(), deltas.end());
    w = lk_color(m, k - 1, deltas).value;
  }
  return ColorK{k, g * pow3(k - 3) + w};
}

RkColoring::RkColoring(int m, int k, FinSet a, std::uint64_t ks_budget)
    : RkColoring(m, k, a, tow_ord(k - 1, Ordinal::eps(m)), ks_budget) {}

RkColoring::RkColoring(int m, int k, FinSet a, Ordinal mu, std::uint64_t ks_budget)
    : m_(m), k_(k), set_(std::move(a)), mu_(std::move(mu)) {
  if (m < 0) throw domain_error("rk: m must be >= 0");
  if (k < 3) throw domain_error("rk: k must be >= 3");
  trace_ = ks_trace(mu_, set_, ks_budget);
}

ColorK RkColoring::color(std::span<const Nat> tuple) const {
  if (static_cast<int>(tuple.size()) != k_) throw domain_error("rk: tuple length != k");
  std::vector<Ordinal> images(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i + 1 < tuple.size() && !(tuple[i] < tuple[i + 1]))
      throw domain_error("rk: tuple not strictly ascending");
    auto it = std::lower_bound(trace_.begin(), trace_.end(), tuple[i],
                               [](const auto& p, const Nat& x) { return p.first < x; });
    if (it == trace_.end() || !(it->first == tuple[i]))
      throw domain_error("rk: tuple element not in A");
    images[i] = it->second;
  }
  // ascending elements map to strictly descending KS images
  return lk_color(m_, k_, images);
}

ColorK rk_color(int m, int k, const FinSet& a, std::span<const Nat> tuple,
                std::uint64_t ks_budget) {
  return RkColoring(m, k, a, ks_budget).color(tuple);
}

std::optional<std::string> estimating_fn_violation(const EstimatingFn& fn) {
  const auto& es = fn.entries;
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (i + 1 < es.size()) {
      if (compare(es[i].first, es[i + 1].first) != std::strong_ordering::greater)
        return "domain not strictly descending";
      if (compare(es[i].second, es[i + 1].second) != std::strong_ordering::greater)
        return "values not strictly increasing along the domain";
    }
    if (psn(es[i].second) > psn(es[i].first)) return "psn increases";
    if (compare(es[i].second, fn.bound) != std::strong_ordering::less)
      return "value not below the bound";
  }
  return std::nullopt;
}

EstimatingFn build_theta(int m, std::span<const Ordinal> gamma, int color) {
  if (color == 0) throw domain_error("build_theta: color 0 has no construction");
  if (color != 1 && color != 2) throw domain_error("build_theta: color must be 1 or 2");
  if (gamma.size() < 2) throw domain_error("build_theta: need at least two ordinals");
  for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
    if (compare(gamma[i], gamma[i + 1]) != std::strong_ordering::greater)
      throw domain_error("build_theta: gamma not strictly descending");

  EstimatingFn fn;
  if (color == 1) {
    Ordinal delta = ld(m, gamma[0], gamma[1]);
    for (std::size_t i = 0; i < gamma.size(); ++i)
      for (std::size_t j = i + 1; j < gamma.size(); ++j)
        if (!(ld(m, gamma[i], gamma[j]) == delta))
          throw domain_error("build_theta: gamma not homogeneous in color 1");
    for (const Ordinal& g : gamma)
      fn.entries.emplace_back(g, coeff_v(m, g, delta));
    fn.bound = Ordinal::eps(m);
  } else {
    std::vector<Ordinal> deltas;
    for (std::size_t i = 0; i + 1 < gamma.size(); ++i)
      deltas.push_back(ld(m, gamma[i], gamma[i + 1]));
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i)
      if (compare(deltas[i], deltas[i + 1]) != std::strong_ordering::greater)
        throw domain_error("build_theta: gamma not homogeneous in color 2");
    for (std::size_t i = 0; i < deltas.size(); ++i)
      fn.entries.emplace_back(gamma[i], deltas[i]);
    // minimal s with max gamma < tow_s(eps_m); the bound tow_{s-1}(eps_m)
    // needs s >= 2 to mean anything, and s = 1 only happens below eps_m
    int s = 1;
    const Ordinal& top = gamma.front();
    if (!top.is_finite() && top.node_level() == m) s = level_and_height(top).second;
    if (s < 2) s = 2;
    fn.bound = tow_ord(s - 1, Ordinal::eps(m));
  }
  if (auto why = estimating_fn_violation(fn))
    throw domain_error("build_theta: " + *why);
  return fn;
}

}  // namespace ordlab
