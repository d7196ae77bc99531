#include <doctest.h>

#include "ordlab/enumerate.hpp"
#include "ordlab/estimation.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

namespace {
Ordinal O(const std::string& s) { return parse_ordinal(s); }
}

TEST_CASE("go clauses") {
  CHECK(go(1, Ordinal(1)) == Ordinal(0));
  CHECK(go(7, Ordinal(1)) == Ordinal(0));
  CHECK(go(3, O("w")) == Ordinal(3));
  CHECK(go(2, O("w^3")) == O("w^2*2+w*2+2"));
  CHECK(go(2, O("w^2")) == O("w*2+2"));
  CHECK(go(2, Ordinal(7)) == Ordinal(2));   // psn(6) = 6 > 2, recurse down
  CHECK(go(2, Ordinal(2)) == Ordinal(1));
  CHECK(go(2, O("e0+w")) == O("e0+2"));
  CHECK(go(2, O("w*2")) == O("w+2"));
  CHECK_THROWS_AS(go(0, O("w")), domain_error);
  CHECK_THROWS_AS(go(2, Ordinal(0)), domain_error);
}

TEST_CASE("go is maximal on small candidate pools") {
  for (const char* alpha_s : {"w^2", "w^3", "w*2+1", "e0", "e0*2"}) {
    Ordinal alpha = O(alpha_s);
    for (int a = 1; a <= 2; ++a) {
      Ordinal g = go(a, alpha);
      CHECK(compare(g, alpha) == std::strong_ordering::less);
      CHECK(psn(g) <= a);
      for (const Ordinal& gamma : enum_psn_bounded(Universe{alpha, Nat(a)}))
        CHECK(compare(gamma, g) != std::strong_ordering::greater);
    }
  }
}

TEST_CASE("F explicit values") {
  CHECK(f_explicit(Ordinal(0)) == Ordinal(0));
  CHECK(f_explicit(O("w^2")) == O("w^2+w+1"));
  CHECK(f_explicit(O("e0")) == O("e0*2+1"));
  CHECK(f_explicit(O("e0*2+w")) == O("e0*4+w+3"));
  CHECK(f_explicit(Ordinal(5)) == Ordinal(5));
  CHECK(f_explicit(O("w")) == O("w+1"));
  CHECK(f_explicit(O("w*2")) == O("w*2+2"));
  CHECK(f_explicit(O("w^w")) == O("w^w*2+1"));
}

TEST_CASE("F explicit agrees with the recursive clauses") {
  for (const Ordinal& a : enum_psn_bounded(Universe{Ordinal::eps(0), 2}))
    CHECK(f_explicit(a) == f_recursive(a));
  for (const char* s : {"e0", "e0*2+w", "e0^2*2", "e0^e0", "e1+w^w*2+3", "w^(w+1)*2+w^2"})
    CHECK(f_explicit(O(s)) == f_recursive(O(s)));
}

TEST_CASE("F additivity under >>") {
  CHECK(much_greater(O("w^2*3"), O("w^2")));
  CHECK(much_greater(O("w^2"), O("w^2")));
  CHECK(!much_greater(O("w^2"), O("w^3")));
  CHECK(!much_greater(O("w^2+w"), O("w^2")));
  CHECK(much_greater(O("e0"), O("w^w")));
  for (const char* b : {"w^3*2", "w^3+w^2", "e0*2", "e0^2"})
    for (const char* a : {"w^2+w+1", "w*4", "5", "w^2*2"}) {
      Ordinal beta = O(b), alpha = O(a);
      if (!much_greater(beta, alpha)) continue;
      CHECK(f_explicit(add(beta, alpha)) ==
            natural_sum(f_explicit(beta), f_explicit(alpha)));
    }
}

TEST_CASE("check_estimation") {
  // F(w*2) = w*2+2, so A must be (w*2+3)-small
  FinSet a({2, 3, 4});
  DecreasingMap g{a, {O("w*2"), O("w+3"), Ordinal(4)}};
  EstimationReport rep = check_estimation(a, g, Ordinal(0), O("w*2"));
  CHECK(rep.verdict == EstimationVerdict::Pass);
  CHECK(rep.f_alpha == O("w*2+2"));

  FinSet single({5});
  rep = check_estimation(single, DecreasingMap{single, {Ordinal(0)}}, Ordinal(0), Ordinal(0));
  CHECK(rep.verdict == EstimationVerdict::Pass);
  CHECK(rep.f_alpha == Ordinal(0));

  FinSet two({2, 3});
  rep = check_estimation(two, DecreasingMap{two, {Ordinal(2), Ordinal(1)}}, Ordinal(0),
                         O("w"));
  CHECK(rep.verdict == EstimationVerdict::Pass);

  // increasing G: hypothesis violation, not a refutation
  rep = check_estimation(two, DecreasingMap{two, {Ordinal(1), Ordinal(2)}}, Ordinal(0),
                         O("w"));
  CHECK(rep.verdict == EstimationVerdict::HypothesisViolation);

  // psn too large
  rep = check_estimation(two, DecreasingMap{two, {O("w*3"), Ordinal(1)}}, Ordinal(0),
                         O("w*3"));
  CHECK(rep.verdict == EstimationVerdict::HypothesisViolation);

  // beta > 0: only the prefix with G(x) >= beta is constrained
  FinSet a2({2, 3, 4, 5});
  DecreasingMap g2{a2, {O("w*2+2"), O("w*2+1"), O("w+4"), Ordinal(5)}};
  rep = check_estimation(a2, g2, O("w*2"), O("w"), HardyLimits{});
  CHECK(rep.verdict == EstimationVerdict::Pass);
  REQUIRE(rep.cutoff.has_value());
  CHECK(*rep.cutoff == 3);
}
