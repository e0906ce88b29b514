#include "doctest.h"
#include "lot/tits.hpp"
#include "lot/todd_coxeter.hpp"

using namespace lot;

TEST_CASE("tits basics on the dihedral group") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y");
  CHECK(tits_is_identity(g, Word::parse("x y x y x y")) == Tri::yes);
  CHECK(tits_is_identity(g, Word::parse("x y")) == Tri::no);
  CHECK(tits_is_identity(g, Word::parse("x^2")) == Tri::yes);
  CHECK(tits_is_identity(g, Word()) == Tri::yes);
  CHECK(tits_equal(g, Word::parse("x y x"), Word::parse("y x y")) == Tri::yes);
  CHECK(tits_equal(g, Word::parse("x y"), Word::parse("y x")) == Tri::no);
  CHECK_THROWS_AS(tits_is_identity(parse_coxeter_graph("x -1- y"), Word::parse("x")),
                  std::invalid_argument);
}

TEST_CASE("tits canonical forms are canonical") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y ; y -3- z");
  auto c1 = tits_canonical(g, Word::parse("x y x"));
  auto c2 = tits_canonical(g, Word::parse("y x y"));
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(*c1 == *c2);
  CHECK(*c1 == Word::parse("x y x"));  // lex least among geodesics
  auto e = tits_canonical(g, Word::parse("z^2 y^4"));
  CHECK(e->empty());
}

TEST_CASE("smallLOT wirtinger relators die in the coxeter quotient") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y ; y -3- z");
  Lot small = parse_lot("x -[y z^2 x]-> y ; y -[z x^2 y]-> z");
  for (const auto& r : wirtinger_presentation(small).relators)
    CHECK(tits_is_identity(g, r) == Tri::yes);
}

TEST_CASE("tits agrees with coset multiplication on small groups") {
  struct Case {
    const char* graph;
    const char* pres;
    std::size_t order;
  };
  for (const auto& c : {Case{"x -3- y", "gens: x y\nrels: x^2 ; y^2 ; x y x y x y", 6},
                        Case{"x -5- y", "gens: x y\nrels: x^2 ; y^2 ; x y x y x y x y x y", 10},
                        Case{"x -3- y ; y -3- z ; x -2- z",
                             "gens: x y z\nrels: x^2 ; y^2 ; z^2 ; x y x y x y ; y z y z y z ; "
                             "x z x z",
                             24}}) {
    CoxeterGraph g = parse_coxeter_graph(c.graph);
    Presentation p = parse_presentation(c.pres);
    CosetTable t = todd_coxeter(p);
    REQUIRE(t.index() == c.order);
    auto reps = coset_reps(t);
    for (std::size_t a = 0; a < t.index(); ++a) {
      for (std::size_t b = 0; b < t.index(); ++b) {
        int prod_coset = t.trace(static_cast<int>(a), reps[b]);
        Word uv = reps[a] * reps[b];
        CHECK(tits_equal(g, uv, reps[static_cast<std::size_t>(prod_coset)]) == Tri::yes);
        std::size_t wrong = (static_cast<std::size_t>(prod_coset) + 1) % t.index();
        CHECK(tits_equal(g, uv, reps[wrong]) == Tri::no);
      }
    }
  }
}

TEST_CASE("tits budget overflow reports unknown") {
  CoxeterGraph g = parse_coxeter_graph("x -7- y ; y -7- z ; z -7- u");
  TitsOptions tiny{3};
  CHECK(tits_is_identity(g, Word::parse("x y x y x y x z u z y x"), tiny) == Tri::unknown);
}
