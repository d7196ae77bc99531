#include <doctest.h>

#include "ordlab/hardy.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

namespace {
Ordinal O(const std::string& s) { return parse_ordinal(s); }

Nat h_value(const std::string& alpha, const Nat& x) {
  HardyOutcome out = hardy_run(O(alpha), x, Carrier::naturals());
  REQUIRE(out.status == HardyStatus::Value);
  return out.value;
}
}

TEST_CASE("FinSet") {
  FinSet a({2, 3, 5});
  CHECK(a.min() == 2);
  CHECK(a.max() == 5);
  CHECK(a.contains(3));
  CHECK(!a.contains(4));
  CHECK(a.next_after(3) == Nat(5));
  CHECK(!a.next_after(5).has_value());
  CHECK(FinSet::parse("2,3,5") == a);
  CHECK(a.prefix_upto(3) == FinSet({2, 3}));
  CHECK(a.suffix_from(3) == FinSet({3, 5}));
  CHECK_THROWS_AS(FinSet({3, 3}), domain_error);
  CHECK_THROWS_AS(FinSet({}), domain_error);
}

TEST_CASE("hardy values") {
  CHECK(h_value("0", 9) == 9);
  CHECK(h_value("w", 3) == 6);
  CHECK(h_value("w^2", 2) == 8);
  CHECK(h_value("w^2*2", 2) == 2048);

  // closed forms: h_{w*k}(x) = 2^k*x and h_{w^2}(x) = 2^x*x
  for (int k = 1; k <= 4; ++k)
    for (int x = 1; x <= 5; ++x)
      CHECK(h_value("w*" + std::to_string(k), x) == Nat(x) * nat_pow(2, k));
  for (int x = 1; x <= 5; ++x)
    CHECK(h_value("w^2", x) == Nat(x) * nat_pow(2, x));
  CHECK(h_value("w^3", 2) == 2048);  // w^3[2] = w^2*2
  // compositional: h_{w^2+w*2+1}(2) = h_{w^2}(h_{w*2}(3)) = 2^12*12
  CHECK(h_value("w^2+w*2+1", 2) == 49152);

  CHECK_THROWS_AS(hardy_run(O("w"), 0, Carrier::naturals()), domain_error);
}

TEST_CASE("hardy on sets") {
  FinSet a({2, 3, 4});
  HardyOutcome out = hardy_run(O("w"), 2, Carrier::of(a));
  CHECK(out.status == HardyStatus::Value);
  CHECK(out.value == 4);

  out = hardy_run(O("w"), 2, Carrier::of(FinSet({2, 3})));
  CHECK(out.status == HardyStatus::Undefined);

  CHECK_THROWS_AS(hardy_run(O("w"), 5, Carrier::of(a)), domain_error);
}

TEST_CASE("hardy trace and budget") {
  HardyTrace t = hardy_eval(O("w"), 3, Carrier::naturals());
  REQUIRE(t.entries.size() == 4);  // one limit step, three successor steps
  CHECK(t.entries[0].kind == StepKind::LimitStep);
  CHECK(t.entries[1].kind == StepKind::SuccessorStep);
  for (std::size_t i = 0; i + 1 < t.entries.size(); ++i) {
    CHECK(compare(t.entries[i + 1].ordinal, t.entries[i].ordinal) !=
          std::strong_ordering::greater);
    CHECK(t.entries[i + 1].position >= t.entries[i].position);
  }

  HardyOutcome out = hardy_run(O("w^2*4"), 2, Carrier::naturals(),
                               HardyLimits{1'000'000, 27});
  CHECK(out.status == HardyStatus::BudgetExceeded);
  CHECK(out.successor_steps == 27);
  CHECK(out.position == 29);  // certifies h >= 29
}

TEST_CASE("largeness") {
  CHECK(largeness(FinSet({5}), Ordinal(0)).kind == Largeness::ExactlyLarge);
  CHECK(largeness(FinSet({2, 3, 4}), O("w")).kind == Largeness::ExactlyLarge);
  CHECK(largeness(FinSet({2, 3}), O("w")).kind == Largeness::Small);
  auto r = largeness(FinSet({2, 3, 4, 5, 9}), O("w"));
  CHECK(r.kind == Largeness::ProperlyLarge);
  CHECK(r.value == 4);
  CHECK(at_most_large(FinSet({2, 3, 4}), O("w")));
  // {2..6} is (w+1)-large: h_{w+1}(2) = 6
  CHECK(!at_most_large(FinSet({2, 3, 4, 5, 6}), O("w")));
}

TEST_CASE("ks_trace") {
  auto t = ks_trace(O("w"), FinSet({2, 3, 4}));
  REQUIRE(t.size() == 3);
  CHECK(t[0] == std::pair{Nat(2), Ordinal(2)});
  CHECK(t[1] == std::pair{Nat(3), Ordinal(1)});
  CHECK(t[2] == std::pair{Nat(4), Ordinal(0)});

  t = ks_trace(O("w*2"), FinSet::interval(2, 8));
  REQUIRE(t.size() == 7);
  CHECK(t[0].second == O("w+2"));
  CHECK(t[1].second == O("w+1"));
  CHECK(t[2].second == Ordinal(4));
  CHECK(t[6].second == Ordinal(0));

  t = ks_trace(Ordinal(5), FinSet({7}));
  CHECK(t[0].second == Ordinal(5));  // nonlimit start recorded unchanged

  // KS values stay 0 once the descent is exhausted
  t = ks_trace(Ordinal(2), FinSet({2, 3, 4, 5, 6}));
  CHECK(t[2].second == Ordinal(0));
  CHECK(t[4].second == Ordinal(0));

  // KS agrees with the Hardy value at a tower ordinal: h^A_{w^w}(2) = 8
  FinSet wide = FinSet::interval(2, 40);
  auto lr = largeness(wide, O("w^w"));
  CHECK(lr.kind == Largeness::ProperlyLarge);
  CHECK(lr.value == 8);
  auto tw = ks_trace(O("w^w"), wide);
  for (const auto& [elem, value] : tw)
    CHECK(value.is_zero() == (elem >= 8));
}

TEST_CASE("split_point") {
  // {2..8} is exactly (w (+) w)-large; the canonical split is at 4
  FinSet a = FinSet::interval(2, 8);
  CHECK(largeness(a, O("w*2")).kind == Largeness::ExactlyLarge);
  Nat u = split_point(a, O("w"), O("w"));
  CHECK(u == 4);
  CHECK(is_large(a.prefix_upto(u), O("w")));
  CHECK(is_large(a.suffix_from(u), O("w")));

  // beta = 0: upper part is a singleton, trivially 0-large
  Nat v = split_point(FinSet({2, 3, 4}), O("w"), Ordinal(0));
  CHECK(v == 4);

  // {1,2,3} is not 3-large: precondition violation
  CHECK_THROWS_AS(split_point(FinSet({1, 2, 3}), Ordinal(2), Ordinal(1)), domain_error);
}

TEST_CASE("extend_to_exactly_large") {
  CHECK(extend_to_exactly_large(FinSet({5}), O("w")) == FinSet::interval(6, 10));
  CHECK(extend_to_exactly_large(FinSet({3}), Ordinal(2)) == FinSet({4, 5}));
  // {4,6} with alpha=3: h_3(4) walks 4 -> 6 -> 7 -> 8, so C = {7,8}
  CHECK(extend_to_exactly_large(FinSet({4, 6}), Ordinal(3)) == FinSet({7, 8}));
  {
    FinSet b({4, 6});
    FinSet c = extend_to_exactly_large(b, Ordinal(3));
    std::vector<Nat> all{4, 6};
    all.insert(all.end(), c.elements().begin(), c.elements().end());
    CHECK(largeness(FinSet(all), Ordinal(3)).kind == Largeness::ExactlyLarge);
  }
  CHECK_THROWS_AS(extend_to_exactly_large(FinSet({2, 3, 4}), O("w")), domain_error);
}
