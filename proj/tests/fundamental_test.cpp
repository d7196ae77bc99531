#include <doctest.h>

#include "ordlab/enumerate.hpp"
#include "ordlab/fundamental.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

namespace {
Ordinal O(const std::string& s) { return parse_ordinal(s); }
}

TEST_CASE("fs cases") {
  CHECK(fs(O("e0"), 2) == O("w^w"));
  CHECK(fs(O("w^2"), 3) == O("w*3"));
  CHECK(fs(O("e0^w"), 2) == O("e0^2"));
  CHECK(fs(O("w"), 4) == Ordinal(4));
  CHECK(fs(O("e1"), 2) == O("e0^e0"));
  CHECK(fs(O("e0^(e0+1)"), 3) == mul(O("e0^e0"), O("w^w^w")));  // e0^e0 * e0[3]
  CHECK(fs(O("w^w"), 3) == O("w^3"));
  CHECK(fs(O("w*3"), 5) == O("w*2+5"));
  CHECK(fs(O("e0*w"), 4) == O("e0*4"));
  CHECK(fs(O("e0^2*(w+1)"), 2) == O("e0^2*w+e0*w^w"));  // peel one copy, descend it
  CHECK(fs(O("w^2+w"), 7) == O("w^2+7"));
  CHECK(fs(O("e0+w^w"), 2) == O("e0+w^2"));
  CHECK(fs(O("e0"), 1) == O("w"));  // tow_1(w)
  CHECK(fs(O("w"), 1) == Ordinal(1));
  CHECK_THROWS_AS(fs(O("w+1"), 2), domain_error);
  CHECK_THROWS_AS(fs(Ordinal(0), 2), domain_error);
  CHECK_THROWS_AS(fs(O("w"), 0), domain_error);
}

TEST_CASE("fs descends") {
  std::vector<Ordinal> u = enum_psn_bounded(Universe{O("w^3+1"), 3});
  u.push_back(O("e0"));
  u.push_back(O("e0^e0"));
  u.push_back(O("e1*2+e0^2*w"));
  for (const Ordinal& lam : u) {
    if (!is_limit(lam)) continue;
    for (int n = 1; n <= 4; ++n) {
      Ordinal s = fs(lam, n);
      CHECK(compare(s, lam) == std::strong_ordering::less);
    }
  }
}

TEST_CASE("fs psn growth, report-only") {
  // A derived sanity bound, not a claim from the source material:
  // psn(fs(b, n)) <= max(n, psn(b)) on the small universe.  Failures are
  // worth a look but do not gate the build.
  std::vector<Ordinal> u = enum_psn_bounded(Universe{O("w^3+1"), 3});
  for (const Ordinal& lam : u) {
    if (!is_limit(lam)) continue;
    for (int n = 2; n <= 4; ++n) {
      Nat cap = psn(lam) > n ? psn(lam) : Nat(n);
      WARN_LE(psn(fs(lam, n)), cap);
    }
  }
}

TEST_CASE("step_down") {
  CHECK(step_down(O("w+1"), 7) == O("w"));
  CHECK(step_down(O("w"), 4) == Ordinal(4));
  CHECK(step_down(O("e1"), 2) == O("e0^e0"));
  CHECK_THROWS_AS(step_down(Ordinal(0), 3), domain_error);
}

TEST_CASE("reaches") {
  auto r = reaches(O("w^2"), O("w^2"), 5);
  CHECK(r.status == ReachStatus::Yes);
  CHECK(r.chain.steps.size() == 1);  // length-0 chain

  r = reaches(O("w^2"), O("w*2"), 3);
  CHECK(r.status == ReachStatus::Yes);
  // w^2 -> w*3 -> w*2+3 -> w*2+2 -> w*2+1 -> w*2
  REQUIRE(r.chain.steps.size() == 6);
  CHECK(r.chain.steps[1] == O("w*3"));
  CHECK(r.chain.steps[2] == O("w*2+3"));

  CHECK(reaches(O("w"), O("w*2"), 5).status == ReachStatus::No);
  CHECK(reaches(O("w^2"), O("w*2+4"), 3).status == ReachStatus::No);
  CHECK(reaches(O("w^3"), Ordinal(1), 3, 2).status == ReachStatus::BudgetExceeded);
  CHECK(reaches(O("w^3"), Ordinal(0), 3, 1'000'000, false).status == ReachStatus::Yes);
}
