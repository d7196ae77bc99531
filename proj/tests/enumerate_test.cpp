#include <doctest.h>

#include "ordlab/enumerate.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

namespace {
Ordinal O(const std::string& s) { return parse_ordinal(s); }
}

TEST_CASE("nmk_formula") {
  CHECK(nmk_formula(1, 1, 0) == 2);
  CHECK(nmk_formula(2, 1, 0) == 27);
  CHECK(nmk_formula(2, 2, 0) == nat_pow(27, 27));
  CHECK(nmk_formula(1, 1, 1) == 2);
  CHECK(nmk_formula(2, 5, 0) == nmk_formula(2, 2, 0));  // k > a clamps
  CHECK(nmk_formula(3, 1, 0) == nat_pow(4, 256));
  CHECK_THROWS_AS(nmk_formula(2, 0, 0), domain_error);
  CHECK_THROWS_AS(nmk_formula(3, 2, 0), feasibility_error);  // tow_2(4^256)
}

TEST_CASE("tower_shape") {
  CHECK(tower_shape(O("e0")) == std::pair{0, 1});
  CHECK(tower_shape(O("e0^e0")) == std::pair{0, 2});
  CHECK(tower_shape(O("e1^e1")) == std::pair{1, 2});
  CHECK(tower_shape(O("w^w")) == std::pair{-1, 2});
  CHECK(!tower_shape(O("w^2")).has_value());
  CHECK(!tower_shape(O("e0*2")).has_value());
  CHECK(!tower_shape(O("e0^e0+1")).has_value());
  CHECK(!tower_shape(Ordinal(7)).has_value());
}

TEST_CASE("enum_psn_bounded") {
  auto u = enum_psn_bounded(Universe{O("e0"), 1});
  REQUIRE(u.size() == 2);
  CHECK(u[0] == Ordinal(0));
  CHECK(u[1] == Ordinal(1));

  u = enum_psn_bounded(Universe{O("e0"), 2});
  CHECK(u.size() == 27);
  // {w^2*c2 + w*c1 + c0 : ci <= 2}, ascending and duplicate-free
  for (std::size_t i = 0; i + 1 < u.size(); ++i)
    CHECK(compare(u[i], u[i + 1]) == std::strong_ordering::less);
  for (const Ordinal& a : u) CHECK(psn(a) <= 2);
  CHECK(u.back() == O("w^2*2+w*2+2"));

  u = enum_psn_bounded(Universe{O("w^3"), 3});
  CHECK(u.size() == 64);
  for (const Ordinal& a : u) {
    CHECK(psn(a) <= 3);
    CHECK(compare(a, O("w^3")) == std::strong_ordering::less);
  }

  u = enum_psn_bounded(Universe{O("e1"), 1});
  CHECK(u.size() == 2);

  // non-tower bounds
  u = enum_psn_bounded(Universe{O("w^3+1"), 3});
  CHECK(u.size() == 65);  // the 64 plus w^3 itself
  u = enum_psn_bounded(Universe{O("e0^2"), 2});
  CHECK(u.size() == 729);  // 27 choices of coefficient and tail each
  u = enum_psn_bounded(Universe{O("e0*2"), 2});
  CHECK(u.size() == 54);

  // counts match the closed form wherever both paths apply
  for (int a = 1; a <= 2; ++a)
    for (int k = 1; k <= 2; ++k) {
      Nat predicted = nmk_formula(a, k, 0);
      if (predicted > 100'000) continue;
      CHECK(Nat(enum_psn_bounded(Universe{tow_ord(k, Ordinal::eps(0)), Nat(a)}).size()) ==
            predicted);
    }

  CHECK_THROWS_AS(enum_psn_bounded(Universe{O("e0"), 3, 1'000'000}), feasibility_error);
  CHECK_THROWS_AS(enum_psn_bounded(Universe{O("e1"), 2, 1'000'000}), feasibility_error);
}
