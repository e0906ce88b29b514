#include "doctest.h"
#include "lot/coxeter.hpp"
#include "lot/todd_coxeter.hpp"

using namespace lot;

TEST_CASE("dihedral groups have order 2m") {
  for (int m = 1; m <= 7; ++m) {
    CoxeterGraph g(Alphabet({"x", "y"}), {{0, 1, std::max(m, 2)}});
    Presentation p = parse_presentation("gens: x y\nrels: x^2 ; y^2 ; " +
                                        prod("x", "y", 2 * m).str());
    CosetTable t = todd_coxeter(p);
    CHECK(t.index() == static_cast<std::size_t>(2 * m));
    CHECK(verify_table(t, p));
  }
}

TEST_CASE("triangle group (3,3,2) has order 24") {
  Presentation p = parse_presentation(
      "gens: x y z\nrels: x^2 ; y^2 ; z^2 ; x y x y x y ; y z y z y z ; x z x z");
  CosetTable t = todd_coxeter(p);
  CHECK(t.index() == 24);
  CHECK(verify_table(t, p));
  // coset representatives hit every coset
  auto reps = coset_reps(t);
  for (std::size_t c = 0; c < t.index(); ++c) CHECK(t.trace(0, reps[c]) == static_cast<int>(c));
}

TEST_CASE("subgroup enumeration: index-4 subgroup of <a,y | y^2>") {
  Presentation p = parse_presentation("gens: a y\nrels: y^2");
  std::vector<Word> h{Word::parse("a^2"), Word::parse("y a^-1 y a^-1"),
                      Word::parse("a y a^-1 y a^-2")};
  CosetTable t = todd_coxeter(p, h);
  CHECK(t.index() == 4);
  CHECK(verify_table(t, p));
}

TEST_CASE("budget exceeded on infinite enumeration") {
  // Z * Z has no finite coset table over the trivial subgroup.
  Presentation p = parse_presentation("gens: a b\nrels:");
  CosetTable t = todd_coxeter(p, {}, TcOptions{256});
  CHECK(t.status() == TableStatus::budget_exceeded);
  CHECK(!verify_table(t, p));
}

TEST_CASE("coincidence handling collapses to the right index") {
  // <a | a^2, a^3> = trivial group
  Presentation p = parse_presentation("gens: a\nrels: a^2 ; a^3");
  CHECK(todd_coxeter(p).index() == 1);
  // <a,b | a^2, b^2, abab> = Z/2 x Z/2
  Presentation q = parse_presentation("gens: a b\nrels: a^2 ; b^2 ; a b a b");
  CosetTable t = todd_coxeter(q);
  CHECK(t.index() == 4);
  CHECK(verify_table(t, q));
  // S_3 = <a,b | a^2, b^3, (ab)^2> over <a>
  Presentation s3 = parse_presentation("gens: a b\nrels: a^2 ; b^3 ; a b a b");
  CHECK(todd_coxeter(s3, {Word::parse("a")}).index() == 3);
}

TEST_CASE("csv export shape") {
  Presentation p = parse_presentation("gens: x\nrels: x^3");
  CosetTable t = todd_coxeter(p);
  std::string csv = to_csv(t);
  CHECK(csv.substr(0, 15) == "coset,x,x^-1\n1,");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 cosets
}
