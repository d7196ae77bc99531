#include <doctest.h>

#include "ordlab/enumerate.hpp"
#include "ordlab/parse.hpp"

using namespace ordlab;

TEST_CASE("parse basics") {
  CHECK(parse_ordinal("0") == Ordinal(0));
  CHECK(parse_ordinal("w^2*3 + w + 5") ==
        normalize({{-1, Ordinal(2), Ordinal(3)}, {-1, Ordinal(1), Ordinal(1)},
                   {-1, Ordinal(0), Ordinal(5)}}));
  CHECK(parse_ordinal("e0^e0") == tow_ord(2, Ordinal::eps(0)));
  CHECK(parse_ordinal("5+w") == Ordinal::omega());  // ordinal sum absorbs
  CHECK(parse_ordinal("(w+1)*w") == parse_ordinal("w^2"));
  CHECK(parse_ordinal("w^w^w") == tow_ord(3, Ordinal::omega()));
  CHECK(parse_ordinal(" w * 2 + 1 ") == add(mul(Ordinal::omega(), 2), Ordinal(1)));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ordinal("2^w"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("(w)^2"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w+"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("e"), parse_error);
  CHECK_THROWS_AS(parse_ordinal("w)"), parse_error);
  CHECK_THROWS_AS(parse_ordinal(""), parse_error);
  try {
    parse_ordinal("w + $");
  } catch (const parse_error& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("render") {
  CHECK(render(parse_ordinal("w*3+2")) == "w*3 + 2");
  CHECK(render(Ordinal::eps(1)) == "e1");
  CHECK(render(Ordinal(0)) == "0");
  CHECK(render(parse_ordinal("w^2*3+w+5")) == "w^2*3 + w + 5");
  CHECK(render(parse_ordinal("e0^e0")) == "e0^e0");
  CHECK(render(parse_ordinal("e0^(w+1)*(w*2)+e0*w+3")) == "e0^(w + 1)*(w*2) + e0*w + 3");
  CHECK(render(parse_ordinal("w*3+2"), RenderStyle::Unicode) ==
        "\xCF\x89\xC2\xB7"
        "3 + 2");
}

TEST_CASE("round trips") {
  // parse(render(.)) is the identity on every canonical form we can reach
  std::vector<Ordinal> all = enum_psn_bounded(Universe{parse_ordinal("w^3+1"), 3});
  for (const Ordinal& a : enum_psn_bounded(Universe{Ordinal::eps(0), 2})) all.push_back(a);
  for (const char* s :
       {"e0", "e1", "e0^e0*2+e0^(w+1)*(w^2+w)+w^w*3+w+17", "e2+e1^e1+e0*2", "e0^(e0^2+1)"})
    all.push_back(parse_ordinal(s));
  for (const Ordinal& a : all) CHECK(parse_ordinal(render(a)) == a);

  // render(parse(.)) normalizes: idempotent after one pass
  for (const char* s : {"5+w", "w+w", "1+1+w^2+w^2", "(w+1)*(w+1)"}) {
    std::string once = render(parse_ordinal(s));
    CHECK(render(parse_ordinal(once)) == once);
  }
}
