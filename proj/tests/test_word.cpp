#include <algorithm>
#include <random>

#include "doctest.h"
#include "lot/errors.hpp"
#include "lot/word.hpp"

using namespace lot;

namespace {

// Oracle: apply single reduction rules in random order until no rule applies.
// Confluence of the implementation is checked against this.
Word naive_involutory(const Word& w, const std::vector<std::string>& killed, std::mt19937& rng) {
  auto is_killed = [&](const std::string& sym) {
    return std::find(killed.begin(), killed.end(), sym) != killed.end();
  };
  // Work on (sym, exp) pairs with rules: drop killed, fold exp mod 2,
  // merge equal neighbours, drop zero runs.
  std::vector<Syllable> v;
  for (const auto& s : w.syllables()) v.push_back(s);
  for (;;) {
    std::vector<std::size_t> candidates;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_killed(v[i].sym) || v[i].exp % 2 == 0 || v[i].exp != 1) candidates.push_back(i);
      if (i + 1 < v.size() && v[i].sym == v[i + 1].sym) candidates.push_back(i);
    }
    if (candidates.empty()) break;
    std::size_t pick = candidates[rng() % candidates.size()];
    if (is_killed(v[pick].sym) || v[pick].exp % 2 == 0) {
      v.erase(v.begin() + static_cast<long>(pick));
    } else if (v[pick].exp != 1) {
      v[pick].exp = ((v[pick].exp % 2) + 2) % 2;  // odd -> 1 (0 handled above)
      if (v[pick].exp == 0) v.erase(v.begin() + static_cast<long>(pick));
    } else {
      // merge with next equal neighbour: x^1 x^1 -> cancel
      if (pick + 1 < v.size() && v[pick].sym == v[pick + 1].sym) {
        int sum = v[pick].exp + v[pick + 1].exp;
        v[pick].exp = sum;
        v.erase(v.begin() + static_cast<long>(pick) + 1);
        if (v[pick].exp == 0) v.erase(v.begin() + static_cast<long>(pick));
      }
    }
  }
  std::vector<Syllable> out(v.begin(), v.end());
  return Word(std::move(out));
}

Word random_word(std::mt19937& rng, int max_len, const std::vector<std::string>& syms) {
  std::vector<Syllable> raw;
  int len = static_cast<int>(rng() % static_cast<unsigned>(max_len + 1));
  for (int i = 0; i < len; ++i) {
    int e = static_cast<int>(rng() % 5) - 2;
    if (e == 0) e = 1;
    raw.push_back({syms[rng() % syms.size()], e});
  }
  return Word(std::move(raw));
}

}  // namespace

TEST_CASE("free reduction basics") {
  CHECK(Word::parse("x x^-1").empty());
  CHECK(Word::parse("x^2 x^-1") == Word::parse("x"));
  CHECK(Word::parse("a b b^-1 a") == Word::parse("a^2"));
  CHECK(free_reduce({{"x", 1}, {"x", -1}}).empty());
  // idempotent
  auto w = Word::parse("a b^2 a^-1");
  CHECK(free_reduce(w.syllables()) == w);
}

TEST_CASE("word parse/print round trip") {
  for (const char* s : {"", "x", "y z^2 x", "a b a b^-1 a^-1 b^-1", "x^-3 y^2", "a^2 b^2"}) {
    Word w = Word::parse(s);
    CHECK(Word::parse(w.str()) == w);
    CHECK(w.str() == Word::parse(w.str()).str());
  }
  CHECK(Word::parse("1").empty());
  CHECK(Word::parse("yz^2x") == Word::parse("y z^2 x"));
  CHECK(Word::parse("x1x2") == Word(std::vector<Syllable>{{"x1", 1}, {"x2", 1}}));
  CHECK_THROWS_AS(Word::parse("x^"), parse_error);
  CHECK_THROWS_AS(Word::parse("2x"), parse_error);
}

TEST_CASE("involutory reduction") {
  CHECK(involutory_reduce(Word::parse("y z^2 x")) == Word::parse("y x"));
  // kill c and fold: a(babcaba)b^-1(babcaba)^-1 -> (ab)^7
  Word u = Word::parse("b a b c a b a");
  Word w = Word::parse("a") * u * Word::parse("b^-1") * u.inverse();
  CHECK(involutory_reduce(w, {"c"}) == prod("a", "b", 14));
  // x y x y^-1 x^-1 y^-1 -> (xy)^3
  CHECK(involutory_reduce(Word::parse("x y x y^-1 x^-1 y^-1")) == prod("x", "y", 6));
  // output is exponent-+1 and killed-free
  Word r = involutory_reduce(Word::parse("a^3 c b^2 a c^-1"), {"c"});
  for (const auto& s : r.syllables()) {
    CHECK(s.exp == 1);
    CHECK(s.sym != "c");
  }
}

TEST_CASE("involutory reduction properties") {
  std::mt19937 rng(12345);
  std::vector<std::string> syms{"a", "b", "c", "d"};
  for (int trial = 0; trial < 300; ++trial) {
    Word w = random_word(rng, 10, syms);
    std::vector<std::string> killed;
    if (trial % 3 == 1) killed = {"c"};
    if (trial % 3 == 2) killed = {"c", "d"};
    Word r = involutory_reduce(w, killed);
    CHECK(involutory_reduce(r, killed) == r);                // idempotent
    CHECK(r == naive_involutory(w, killed, rng));            // confluence vs oracle
    CHECK(involutory_reduce(w * w.reversed()).empty());      // w * reverse(w) dies
  }
}

TEST_CASE("prod") {
  CHECK(prod("a", "b", 3) == Word::parse("a b a"));
  CHECK(prod("a", "b", 0).empty());
  CHECK(prod("a", "b", 4) == Word::parse("a b a b"));
  CHECK_THROWS_AS(prod("a", "b", -1), std::invalid_argument);
  CHECK_THROWS_AS(prod("a", "a", 2), std::invalid_argument);
  for (int k = 0; k <= 9; ++k) {
    Word p = prod("x", "y", k);
    CHECK(p.letter_length() == k);
    auto ls = p.letters();
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(ls[i].sym != ls[i + 1].sym);
    if (k % 2 == 1) CHECK(ls.back().sym == "x");
    if (k >= 2 && k % 2 == 0) CHECK(ls.back().sym == "y");
  }
}

TEST_CASE("cyclic operations") {
  CHECK(cyclic_reduce(Word::parse("x a x^-1")) == Word::parse("a"));
  auto rots = cyclic_rotations(Word::parse("a b a b"));
  CHECK(std::count(rots.begin(), rots.end(), Word::parse("b a b a")) == 2);
  CHECK(Word::parse("a b a b a b").inverse() == Word::parse("b^-1 a^-1 b^-1 a^-1 b^-1 a^-1"));
  CHECK(cyclic_rotations(Word()).size() == 1);
}

TEST_CASE("cyclic reduction is minimal among conjugates") {
  std::mt19937 rng(777);
  std::vector<std::string> syms{"a", "b", "c"};
  for (int trial = 0; trial < 200; ++trial) {
    Word w = random_word(rng, 8, syms);
    Word c = cyclic_reduce(w);
    // conjugate by every word of letter length <= 2 and compare lengths
    std::vector<Word> conjugators{Word()};
    for (const auto& s : syms)
      for (int e : {1, -1}) conjugators.push_back(Word({{s, e}}));
    for (const auto& s : syms)
      for (const auto& t : syms)
        for (int e1 : {1, -1})
          for (int e2 : {1, -1}) conjugators.push_back(Word({{s, e1}}) * Word({{t, e2}}));
    for (const auto& g : conjugators) {
      Word conj = g * w * g.inverse();
      CHECK(conj.letter_length() >= c.letter_length());
    }
    // and cyclic_reduce is conjugation-invariant on rotations
    for (const auto& r : cyclic_rotations(c)) CHECK(r.letter_length() == c.letter_length());
  }
}

TEST_CASE("alphabet") {
  Alphabet a({"x", "y", "z"});
  CHECK(a.index_of("z") == 2);
  CHECK(a.contains("y"));
  CHECK(!a.contains("q"));
  CHECK_THROWS_AS(Alphabet({"x", "x"}), std::invalid_argument);
  Word w = Word::parse("x y^-2");
  CHECK(from_indexed(to_indexed(w, a), a) == w);
}
