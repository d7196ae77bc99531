#include <doctest.h>

#include <algorithm>

#include "ordlab/enumerate.hpp"
#include "ordlab/ordinal.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

namespace {

Ordinal O(const std::string& s) { return parse_ordinal(s); }

std::vector<Ordinal> u27() { return enum_psn_bounded(Universe{Ordinal::eps(0), 2}); }

// independent natural-sum oracle: merge the base-omega expansions as
// multisets of exponents
Ordinal natsum_by_merge(const Ordinal& a, const Ordinal& b) {
  std::vector<OmegaTerm> merged;
  auto va = omega_view(a);
  auto vb = omega_view(b);
  std::size_t i = 0, j = 0;
  while (i < va.size() || j < vb.size()) {
    if (i == va.size()) { merged.push_back(vb[j++]); continue; }
    if (j == vb.size()) { merged.push_back(va[i++]); continue; }
    auto c = compare(va[i].exponent, vb[j].exponent);
    if (c == std::strong_ordering::greater) merged.push_back(va[i++]);
    else if (c == std::strong_ordering::less) merged.push_back(vb[j++]);
    else {
      merged.push_back(OmegaTerm{va[i].exponent, va[i].coefficient + vb[j].coefficient});
      ++i; ++j;
    }
  }
  return from_omega_view(merged);
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(normalize({{0, Ordinal(0), O("w^w")}}) == O("w^w"));
  CHECK(normalize({{-1, Ordinal(1), Ordinal(2)}, {-1, Ordinal(1), Ordinal(1)}}) == O("w*3"));
  // input order is the ordinal sum: 5 + w collapses to w
  CHECK(normalize({{-1, Ordinal(0), Ordinal(5)}, {-1, Ordinal(1), Ordinal(1)}}) == O("w"));
  CHECK_THROWS_AS(normalize({{-2, Ordinal(0), Ordinal(1)}}), domain_error);
  CHECK_THROWS_AS(normalize({{0, Ordinal(1), Ordinal(0)}}), domain_error);
}

TEST_CASE("normalize/decompose round trip") {
  for (const Ordinal& a : u27()) CHECK(normalize(decompose(a)) == a);
  for (const char* s : {"e0^e0", "e1*2+e0*(w+1)+w^w*3+4", "e2^(e1*2)+e0"}) {
    CHECK(normalize(decompose(O(s))) == O(s));
  }
}

TEST_CASE("compare") {
  CHECK(compare(O("w^w"), O("e0")) == std::strong_ordering::less);
  CHECK(compare(O("e0^2*2"), O("e0^2+e0")) == std::strong_ordering::greater);
  CHECK(compare(O("w*3"), O("w*3")) == std::strong_ordering::equal);

  // strict total order on the 27-universe
  auto u = u27();
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) {
      auto c = compare(u[i], u[j]);
      if (i < j) CHECK(c == std::strong_ordering::less);
      if (i == j) CHECK(c == std::strong_ordering::equal);
      if (i > j) CHECK(c == std::strong_ordering::greater);
    }
}

TEST_CASE("classify and pred") {
  CHECK(classify(Ordinal(0)) == OrdKind::Zero);
  CHECK(classify(O("w+5")) == OrdKind::Successor);
  CHECK(pred(O("w+5")) == O("w+4"));
  CHECK(classify(O("e0*2")) == OrdKind::Limit);
  CHECK(classify(O("e0+w")) == OrdKind::Limit);
  CHECK(pred(O("e0+1")) == O("e0"));
  CHECK_THROWS_AS(pred(O("w")), domain_error);
}

TEST_CASE("add") {
  CHECK(add(O("w"), O("w^2")) == O("w^2"));
  CHECK(add(O("w^2"), O("w")) == O("w^2+w"));
  CHECK(add(O("e0"), Ordinal(1)) == O("e0+1"));
  CHECK(add(O("w^2+w+1"), O("w+3")) == O("w^2+w*2+3"));
  CHECK(add(O("w"), O("e0+1")) == O("e0+1"));

  auto u = u27();
  for (const Ordinal& a : u)
    for (const Ordinal& b : u) {
      // a + b >= b, and the sum agrees with the natural sum when a's least
      // omega exponent dominates b's greatest
      Ordinal s = add(a, b);
      CHECK(compare(s, b) != std::strong_ordering::less);
      if (!a.is_zero() && !b.is_zero()) {
        auto va = omega_view(a);
        auto vb = omega_view(b);
        if (compare(va.back().exponent, vb.front().exponent) !=
            std::strong_ordering::less)
          CHECK(s == natural_sum(a, b));
      }
      for (const Ordinal& c : u)
        CHECK(add(add(a, b), c) == add(a, add(b, c)));
    }
}

TEST_CASE("mul") {
  CHECK(mul(O("w+1"), O("w")) == O("w^2"));
  CHECK(mul(O("w"), Ordinal(2)) == O("w*2"));
  CHECK(mul(O("e0"), O("w")) == O("e0*w"));
  CHECK(mul(O("e0"), O("w")).leading().coefficient == O("w"));
  CHECK(mul(O("w+1"), Ordinal(2)) == O("w*2+1"));
  CHECK(mul(Ordinal(2), O("w+5")) == O("w+10"));
  CHECK(mul(O("e0"), O("e0")) == O("e0^2"));
  CHECK(mul(O("w^2"), O("w^w")) == O("w^w"));       // w^(2+w) = w^w
  CHECK(mul(O("e0+1"), O("e0")) == O("e0^2"));      // left absorption at the fixpoint
  CHECK(mul(O("e0"), O("e1")) == O("e1"));

  // associativity spot-check on mixed shapes
  for (const char* x : {"w+1", "w^2*2", "3", "e0*2+1"})
    for (const char* y : {"w", "2", "w^w+w"})
      for (const char* z : {"w*2", "e0", "5"})
        CHECK(mul(mul(O(x), O(y)), O(z)) == mul(O(x), mul(O(y), O(z))));

  // a*n is iterated addition, and multiplication distributes from the left
  std::vector<Ordinal> pool = u27();
  for (const char* s : {"e0", "e0*2+w", "e0^2", "e1+e0*w"}) pool.push_back(O(s));
  for (const Ordinal& a : pool) {
    Ordinal acc;
    for (int n = 1; n <= 4; ++n) {
      acc = add(acc, a);
      CHECK(mul(a, Ordinal(n)) == acc);
    }
  }
  for (const Ordinal& a : pool)
    for (const char* y : {"w+1", "w^2", "e0+2", "7"})
      for (const char* z : {"w", "4", "e0*2"})
        CHECK(mul(a, add(O(y), O(z))) == add(mul(a, O(y)), mul(a, O(z))));
}

TEST_CASE("natural_sum") {
  CHECK(natural_sum(O("w+1"), O("w")) == O("w*2+1"));
  CHECK(natural_sum(O("e0"), Ordinal(0)) == O("e0"));
  CHECK(natural_sum(O("e0"), O("e0")) == O("e0*2"));
  CHECK(natural_sum(O("e0"), O("w")) == O("e0+w"));

  // the leveled recursion agrees with hereditary base-omega multiset merge,
  // including across levels
  auto u = u27();
  for (const char* s : {"e0", "e0*2+w", "e0^2*2+e0*(w+1)", "e1+e0", "e0^e0"})
    u.push_back(O(s));
  for (const Ordinal& a : u)
    for (const Ordinal& b : u) {
      Ordinal s = natural_sum(a, b);
      CHECK(s == natural_sum(b, a));
      CHECK(s == natsum_by_merge(a, b));
    }
}

TEST_CASE("level and height") {
  auto lh = [](const std::string& s) { return level_and_height(parse_ordinal(s)); };
  CHECK(lh("w") == std::pair{0, 2});
  CHECK(lh("w^w") == std::pair{0, 3});
  CHECK(lh("e0^e0") == std::pair{1, 3});
  CHECK(lh("5") == std::pair{0, 1});
  CHECK(lh("e1") == std::pair{2, 2});
  CHECK_THROWS_AS(level_and_height(Ordinal(0)), domain_error);

  // oracle: unfold the definition with tow_ord and compare
  for (const char* s : {"w", "w^w", "w^w^w", "e0", "e0^e0", "e0*2+w", "e1+e0", "w^2*2+1"}) {
    Ordinal a = O(s);
    auto [l, h] = level_and_height(a);
    CHECK(compare(a, Ordinal::eps(l)) == std::strong_ordering::less);
    if (l > 0) CHECK(compare(a, Ordinal::eps(l - 1)) != std::strong_ordering::less);
    CHECK(compare(a, tow_ord(h, Ordinal::eps(l - 1))) == std::strong_ordering::less);
    if (h > 1)
      CHECK(compare(a, tow_ord(h - 1, Ordinal::eps(l - 1))) != std::strong_ordering::less);
  }
}

TEST_CASE("psn") {
  CHECK(psn(Ordinal(0)) == 0);
  CHECK(psn(O("w^3+w*3")) == 3);
  CHECK(psn(O("e0^e0")) == 3);  // psn(tow_2(e0)) = 3
  CHECK(psn(O("e0")) == 2);
  CHECK(psn(Ordinal(7)) == 7);
  CHECK(psn(O("w*3")) == 3);
}

TEST_CASE("tow") {
  CHECK(tow_ord(2, Ordinal::omega()) == O("w^w"));
  CHECK(nat_tow(3, 2) == 16);
  CHECK(nat_tow(2, 3) == 27);
  CHECK(tow_ord(2, Ordinal::eps(0)) == O("e0^e0"));
  CHECK(tow_ord(1, Ordinal::eps(1)) == O("e1"));
  CHECK_THROWS_AS(tow_ord(0, Ordinal::omega()), domain_error);
  CHECK_THROWS_AS(nat_tow(0, 2), domain_error);
}

TEST_CASE("to_base") {
  auto tb = to_base(O("w^w"), 0);
  REQUIRE(tb.size() == 1);
  CHECK(tb[0].first == Ordinal(0));
  CHECK(tb[0].second == O("w^w"));

  tb = to_base(O("e0*2+w"), 0);
  REQUIRE(tb.size() == 2);
  CHECK(tb[0] == std::pair{Ordinal(1), Ordinal(2)});
  CHECK(tb[1] == std::pair{Ordinal(0), O("w")});

  tb = to_base(O("w*3+2"), -1);
  REQUIRE(tb.size() == 2);
  CHECK(tb[0] == std::pair{Ordinal(1), Ordinal(3)});
  CHECK(tb[1] == std::pair{Ordinal(0), Ordinal(2)});

  CHECK_THROWS_AS(to_base(O("e0"), -1), domain_error);

  // Lemma: psn(alpha) >= psn of every exponent and coefficient, at the
  // canonical base and above it
  for (const Ordinal& a : u27()) {
    if (a.is_zero()) continue;
    for (int m = a.base_level(); m <= a.base_level() + 2; ++m)
      for (const auto& [e, c] : to_base(a, m)) {
        CHECK(psn(e) <= psn(a));
        CHECK(psn(c) <= psn(a));
      }
  }
  for (const char* s : {"e0^e0", "e1*2+e0", "e0^(w+1)*(w^2+1)+e0*w"}) {
    Ordinal a = O(s);
    for (int m = a.base_level(); m <= a.base_level() + 2; ++m)
      for (const auto& [e, c] : to_base(a, m)) {
        CHECK(psn(e) <= psn(a));
        CHECK(psn(c) <= psn(a));
      }
  }
}

TEST_CASE("omega_view") {
  auto v = omega_view(O("e0^2*3"));
  REQUIRE(v.size() == 1);
  CHECK(v[0].exponent == O("e0*2"));
  CHECK(v[0].coefficient == 3);

  v = omega_view(O("w^2*2+w+5"));
  REQUIRE(v.size() == 3);
  CHECK(v[0].exponent == Ordinal(2));
  CHECK(v[0].coefficient == 2);
  CHECK(v[2].exponent == Ordinal(0));
  CHECK(v[2].coefficient == 5);

  v = omega_view(O("e0*2+w"));
  REQUIRE(v.size() == 2);
  CHECK(v[0].exponent == O("e0"));
  CHECK(v[0].coefficient == 2);
  CHECK(v[1].exponent == Ordinal(1));
  CHECK(v[1].coefficient == 1);

  for (const Ordinal& a : u27()) CHECK(from_omega_view(omega_view(a)) == a);
  for (const char* s : {"e0^e0*2+e0^2*(w+1)+w", "e1+e0*2+5", "e1^e1+e1^2*(e0+1)"}) {
    auto view = omega_view(O(s));
    for (std::size_t i = 0; i + 1 < view.size(); ++i)
      CHECK(compare(view[i].exponent, view[i + 1].exponent) == std::strong_ordering::greater);
    CHECK(from_omega_view(view) == O(s));
  }
}

TEST_CASE("omega_pow and eps_pow") {
  CHECK(omega_pow(O("e0")) == O("e0"));
  CHECK(omega_pow(O("e0+1")) == O("e0*w"));
  CHECK(omega_pow(O("e0*2")) == O("e0^2"));
  CHECK(omega_pow(O("e0^2")) == O("e0^e0"));
  CHECK(omega_pow(Ordinal(0)) == Ordinal(1));
  CHECK(eps_pow(0, O("e1")) == O("e1"));
  CHECK(eps_pow(1, Ordinal(2)) == O("e1^2"));
}
