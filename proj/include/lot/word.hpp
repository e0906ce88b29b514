#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace lot {

// One maximal run of a single generator, e.g. z^-2.
struct Syllable {
  std::string sym;
  int exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

struct Letter {
  std::string sym;
  int sign = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word stored as syllable runs: adjacent syllables carry
/// distinct symbols and every exponent is nonzero.  Construction reduces, so
/// every Word value is freely reduced; the empty word is a legal value.
///
/// Text syntax: juxtaposed symbols with optional ^n / ^-n exponents,
/// e.g. `y z^2 x`, `a b a b^-1 a^-1 b^-1`.  A symbol is a single letter
/// followed by optional digits (x, y2, c11), so whitespace between syllables
/// is optional.  The printer emits the canonical spaced form and round-trips
/// bit-exactly through the parser.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> raw);

  static Word parse(std::string_view text);
  static Word from_letters(const std::vector<Letter>& letters);

  const std::vector<Syllable>& syllables() const { return syls_; }
  std::vector<Letter> letters() const;

  bool empty() const { return syls_.empty(); }
  std::size_t syllable_count() const { return syls_.size(); }
  long letter_length() const;

  Word inverse() const;
  /// Syllables in reverse order, exponents unchanged (not the inverse).
  Word reversed() const;

  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syls_;
};

/// Ordered list of distinct generator names.  Order is stable and used for
/// deterministic output everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& at(std::size_t i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  bool contains(std::string_view sym) const;
  /// Index of `sym`; throws std::invalid_argument if absent.
  int index_of(std::string_view sym) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// Free reduction of a raw syllable sequence (merge equal neighbours, drop
/// trivial runs, to a fixed point).  Idempotent.
Word free_reduce(std::vector<Syllable> raw);

/// Reduction in the quotient where every symbol not in `killed` is an
/// involution and every killed symbol is trivial: killed syllables are
/// deleted, even runs vanish, signs are dropped, and adjacent equal letters
/// cancel to a fixed point.  The result has only exponent-+1 syllables.
Word involutory_reduce(const Word& w, const std::vector<std::string>& killed = {});

/// Alternating word x y x y ... of length k (k >= 0); ends with x when k is
/// odd, with y when k is even.
Word prod(const std::string& x, const std::string& y, int k);

/// Cyclically reduced word conjugate to w.
Word cyclic_reduce(const Word& w);

/// All rotations of w at letter granularity (freely reduced again at the
/// seam).  The rotation count equals the letter length of w; the empty word
/// has the single rotation {w}.
std::vector<Word> cyclic_rotations(const Word& w);

/// Symbols occurring in w, sorted by name.
std::vector<std::string> support(const Word& w);

/// Letters of w as signed 1-based alphabet indices (+i / -i).
std::vector<int> to_indexed(const Word& w, const Alphabet& alphabet);
Word from_indexed(const std::vector<int>& letters, const Alphabet& alphabet);

}  // namespace lot
