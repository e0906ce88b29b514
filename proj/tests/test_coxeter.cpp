#include <random>

#include "doctest.h"
#include "lot/coxeter.hpp"
#include "lot/errors.hpp"

using namespace lot;

namespace {

const char* kSmallLot = "x -[y z^2 x]-> y ; y -[z x^2 y]-> z";

// All labeled trees on n vertices via Pruefer sequences.
std::vector<std::vector<std::pair<int, int>>> all_trees(int n) {
  std::vector<std::vector<std::pair<int, int>>> trees;
  if (n == 1) {
    trees.push_back({});
    return trees;
  }
  if (n == 2) {
    trees.push_back({{0, 1}});
    return trees;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  for (;;) {
    // decode
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int v : seq) ++degree[static_cast<std::size_t>(v)];
    std::vector<std::pair<int, int>> edges;
    std::vector<int> s = seq;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    for (int v : s) {
      int leaf = -1;
      for (int u = 0; u < n; ++u)
        if (degree[static_cast<std::size_t>(u)] == 1 && !used[static_cast<std::size_t>(u)]) {
          leaf = u;
          break;
        }
      edges.push_back({leaf, v});
      used[static_cast<std::size_t>(leaf)] = 1;
      --degree[static_cast<std::size_t>(v)];
    }
    std::vector<int> last;
    for (int u = 0; u < n; ++u)
      if (!used[static_cast<std::size_t>(u)] && degree[static_cast<std::size_t>(u)] == 1)
        last.push_back(u);
    edges.push_back({last[0], last[1]});
    trees.push_back(edges);
    // next sequence
    int i = n - 3;
    while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) {
      seq[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++seq[static_cast<std::size_t>(i)];
  }
  return trees;
}

}  // namespace

TEST_CASE("coxeter graph parse/print") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y ; y -3- z");
  CHECK(g.is_tree());
  CHECK(g.label(0, 1) == 3);
  CHECK(g.label(1, 0) == 3);
  CHECK(g.label(0, 2) == 0);
  CHECK(same_graph(parse_coxeter_graph(print_coxeter_graph(g)), g));
  CHECK_THROWS_AS(parse_coxeter_graph("x -3- x"), parse_error);
  CHECK_THROWS_AS(parse_coxeter_graph("x -3- y ; y -5- x"), parse_error);
  CoxeterGraph triangle = parse_coxeter_graph("x -3- y ; y -3- z ; x -2- z");
  CHECK(!triangle.is_tree());
}

TEST_CASE("dihedral types of the named cases") {
  CHECK(dihedral_type_word("x", "y", Word::parse("y z^2 x")).m == 3);
  CHECK(dihedral_type_word("x", "y", Word::parse("y x y x y")).m == 5);
  CHECK(dihedral_type_word("x", "y", Word::parse("x y x y x")).m == 5);
  CHECK(dihedral_type_word("x", "y", Word::parse("x")).m == 1);
  // even-length alternating image: computed directly, note attached
  auto c1 = dihedral_type_word("x", "y", Word::parse("x y x y"));
  CHECK(c1.m == 3);
  CHECK(c1.even_reduction_note);
  CHECK(!c1.note.empty());
  auto c3 = dihedral_type_word("x", "y", Word::parse("y x y x"));
  CHECK(c3.m == 5);
  CHECK(c3.even_reduction_note);
  auto c3small = dihedral_type_word("x", "y", Word::parse("y x"));
  CHECK(c3small.m == 3);
  CHECK(c3small.even_reduction_note);
  // odd-length images have no note
  CHECK(!dihedral_type_word("x", "y", Word::parse("y x y x y")).even_reduction_note);
  CHECK_THROWS_AS(dihedral_type_word("x", "y", Word::parse("z y")), std::invalid_argument);
}

TEST_CASE("dihedral type random: odd, reorientation invariant") {
  std::mt19937 rng(99);
  std::vector<std::string> syms{"x", "y", "z", "u"};
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Syllable> raw;
    int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) {
      std::string s = syms[rng() % syms.size()];
      int e = 1 + static_cast<int>(rng() % 2);
      if (s != "x" && s != "y") e = 2;  // outside letters even
      if (rng() % 2) e = -e;
      raw.push_back({s, e});
    }
    Word w(std::move(raw));
    auto info = dihedral_type_word("x", "y", w);
    CHECK(info.m % 2 == 1);
    CHECK(info.m >= 1);
    // flip random syllable signs
    auto syls = w.syllables();
    for (auto& s : syls)
      if (rng() % 2) s.exp = -s.exp;
    CHECK(dihedral_type_word("x", "y", Word(std::move(syls))).m == info.m);
  }
}

TEST_CASE("coxeter tree of the three-vertex examples") {
  CoxeterGraph expect = parse_coxeter_graph("x -3- y ; y -3- z");
  CHECK(same_graph(coxeter_tree_of(parse_lot(kSmallLot)), expect));
  CHECK(same_graph(coxeter_tree_of(parse_lot("x -[y x]-> y ; y -[z y]-> z")), expect));
  CHECK(same_graph(coxeter_tree_of(parse_lot("x -[y x y x y]-> y")),
                   parse_coxeter_graph("x -5- y")));
}

TEST_CASE("lot_from_coxeter_tree") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y ; y -3- z");
  auto plain = lot_from_coxeter_tree(g, false);
  CHECK(!plain.padded);
  CHECK(plain.lot.edges()[0].label == Word::parse("y x"));
  CHECK(plain.lot.edges()[1].label == Word::parse("z y"));
  auto padded = lot_from_coxeter_tree(g, true);
  CHECK(padded.padded);
  CHECK(padded.lot.edges()[0].label == Word::parse("y z^2 x"));
  CHECK(padded.lot.edges()[1].label == Word::parse("z x^2 y"));
  CHECK(is_prime(padded.lot).prime);

  auto m1 = lot_from_coxeter_tree(parse_coxeter_graph("x -1- y"), false);
  CHECK(m1.lot.edges()[0].label == Word::parse("x"));
  CHECK(coxeter_tree_of(m1.lot).label(0, 1) == 1);

  auto two = lot_from_coxeter_tree(parse_coxeter_graph("x -3- y"), true);
  CHECK(two.padding_warning);
  CHECK(!two.padded);

  CHECK_THROWS_AS(lot_from_coxeter_tree(parse_coxeter_graph("x -4- y"), false),
                  std::invalid_argument);
}

TEST_CASE("roundtrip over all small odd trees") {
  for (int n = 1; n <= 4; ++n) {
    auto trees = all_trees(n);
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    for (const auto& shape : trees) {
      // a few label assignments per shape
      for (int pattern = 0; pattern < 9; ++pattern) {
        std::vector<CoxEdge> edges;
        int code = pattern;
        for (const auto& [a, b] : shape) {
          edges.push_back({a, b, 2 * (code % 3) + 1});  // 1, 3, 5
          code /= 3;
        }
        CoxeterGraph g(Alphabet(names), std::move(edges));
        for (bool pad : {false, true}) {
          auto built = lot_from_coxeter_tree(g, pad);
          CHECK(same_graph(coxeter_tree_of(built.lot), g));
          CHECK(is_coxeter_type(built.lot).ok);
        }
      }
    }
  }
}

TEST_CASE("coxeter and artin presentations") {
  CoxeterGraph g = parse_coxeter_graph("x -3- y");
  Presentation c = coxeter_presentation(g);
  REQUIRE(c.relators.size() == 3);
  CHECK(c.relators[0] == Word::parse("x^2"));
  CHECK(c.relators[1] == Word::parse("y^2"));
  CHECK(c.relators[2] == Word::parse("x y x y x y"));
  Presentation a = artin_presentation(g);
  REQUIRE(a.relators.size() == 1);
  CHECK(a.relators[0] == Word::parse("x y x y^-1 x^-1 y^-1"));
  CoxeterGraph triangle = parse_coxeter_graph("x -3- y ; y -3- z ; x -2- z");
  CHECK(artin_presentation(triangle).relators.size() == 3);
  CHECK_THROWS_AS(coxeter_presentation(parse_coxeter_graph("x -1- y")), std::invalid_argument);
}

TEST_CASE("log from coxeter graph realizes the artin presentation") {
  CoxeterGraph triangle = parse_coxeter_graph("x -3- y ; y -3- z ; x -2- z");
  Lot log = log_from_coxeter_graph(triangle);
  REQUIRE(log.edges().size() == 3);
  CHECK(log.edges()[0].label == Word::parse("y x"));
  CHECK(log.edges()[1].label == Word::parse("z y"));
  CHECK(log.edges()[2].src == log.edges()[2].dst);  // loop at x
  CHECK(log.edges()[2].label == Word::parse("z"));
  Presentation w = wirtinger_presentation(log);
  Presentation a = artin_presentation(triangle);
  REQUIRE(w.relators.size() == a.relators.size());
  for (std::size_t i = 0; i < w.relators.size(); ++i) CHECK(w.relators[i] == a.relators[i]);

  // single even edge: loop with commutator relator
  Lot le = log_from_coxeter_graph(parse_coxeter_graph("x -2- y"));
  CHECK(le.edges()[0].label == Word::parse("y"));
  CHECK(wirtinger_presentation(le).relators[0] == Word::parse("x y x^-1 y^-1"));

  // random odd/even mix
  for (int m = 2; m <= 7; ++m) {
    CoxeterGraph g(Alphabet({"x", "y"}), {{0, 1, m}});
    Presentation wp = wirtinger_presentation(log_from_coxeter_graph(g));
    Presentation ap = artin_presentation(g);
    CHECK(wp.relators == ap.relators);
  }
}

TEST_CASE("epi lot for coxeter graph") {
  CoxeterGraph triangle = parse_coxeter_graph("x -3- y ; y -3- z ; x -2- z");
  auto epi = epi_lot_for_coxeter(triangle);
  CHECK(epi.spanning_tree.edges().size() == 2);
  for (const auto& e : epi.spanning_tree.edges()) CHECK(e.m % 2 == 1);
  CHECK(is_prime(epi.lot).prime);
  CHECK_THROWS_AS(epi_lot_for_coxeter(parse_coxeter_graph("x -2- y")), std::invalid_argument);
  auto single = epi_lot_for_coxeter(parse_coxeter_graph("x -3- y"));
  CHECK(single.lot.vertices().size() == 2);
}

TEST_CASE("forge high rank lots") {
  auto f1 = forge_high_rank_lot(1);
  CHECK(f1.lot.vertices().size() == 1);
  CHECK(f1.certificate.rank_established);
  auto f2 = forge_high_rank_lot(2);
  CHECK(f2.certificate.threshold == 24);
  CHECK(f2.tree.edges()[0].m == 25);
  auto f3 = forge_high_rank_lot(3);
  CHECK(f3.certificate.threshold == 48);
  for (const auto& e : f3.tree.edges()) CHECK(e.m == 49);
  CHECK(is_prime(f3.lot).prime);
  CHECK(is_coxeter_type(f3.lot).ok);
  CHECK_THROWS_AS(forge_high_rank_lot(0), std::invalid_argument);
}

TEST_CASE("collapse unit edges") {
  auto c = collapse_unit_edges(parse_coxeter_graph("x -1- y ; y -3- z"));
  CHECK(c.graph.vertices().size() == 2);
  CHECK(c.graph.edges()[0].m == 3);
  CHECK(c.vertex_map[0] == c.vertex_map[1]);
  CHECK_THROWS_AS(collapse_unit_edges(parse_coxeter_graph("x -1- y ; x -3- z ; y -5- z")),
                  std::invalid_argument);
}
