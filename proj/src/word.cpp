#include "lot/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "lot/errors.hpp"

namespace lot {

Word::Word(std::vector<Syllable> raw) {
  for (auto& s : raw) {
    if (s.exp == 0) continue;
    if (!syls_.empty() && syls_.back().sym == s.sym) {
      syls_.back().exp += s.exp;
      if (syls_.back().exp == 0) syls_.pop_back();
    } else {
      syls_.push_back(std::move(s));
    }
  }
}

Word free_reduce(std::vector<Syllable> raw) { return Word(std::move(raw)); }

namespace {

bool is_sym_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Word Word::parse(std::string_view text) {
  std::vector<Syllable> raw;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  // "1" denotes the empty word.
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws();
    if (i != text.size()) throw parse_error("word: unexpected text after '1'");
    return Word();
  }
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    if (!is_sym_start(text[i]))
      throw parse_error("word: expected generator name at position " + std::to_string(i) +
                        " in '" + std::string(text) + "'");
    std::string sym(1, text[i]);
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      sym += text[i];
      ++i;
    }
    int exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && text[i] == '-') {
        neg = true;
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error("word: malformed exponent in '" + std::string(text) + "'");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000) throw parse_error("word: exponent too large");
        ++i;
      }
      exp = static_cast<int>(neg ? -v : v);
    }
    raw.push_back({std::move(sym), exp});
  }
  return Word(std::move(raw));
}

Word Word::from_letters(const std::vector<Letter>& letters) {
  std::vector<Syllable> raw;
  raw.reserve(letters.size());
  for (const auto& l : letters) raw.push_back({l.sym, l.sign});
  return Word(std::move(raw));
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out;
  for (const auto& s : syls_) {
    int sign = s.exp > 0 ? 1 : -1;
    long n = s.exp > 0 ? s.exp : -static_cast<long>(s.exp);
    for (long k = 0; k < n; ++k) out.push_back({s.sym, sign});
  }
  return out;
}

long Word::letter_length() const {
  long n = 0;
  for (const auto& s : syls_) n += s.exp > 0 ? s.exp : -static_cast<long>(s.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> raw(syls_.rbegin(), syls_.rend());
  for (auto& s : raw) s.exp = -s.exp;
  Word w;
  w.syls_ = std::move(raw);  // reversal of a reduced word is reduced
  return w;
}

Word Word::reversed() const {
  Word w;
  w.syls_.assign(syls_.rbegin(), syls_.rend());
  return w;
}

std::string Word::str() const {
  std::string out;
  for (const auto& s : syls_) {
    if (!out.empty()) out += ' ';
    out += s.sym;
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> raw = a.syls_;
  raw.insert(raw.end(), b.syls_.begin(), b.syls_.end());
  return Word(std::move(raw));
}

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("alphabet: empty symbol name");
    if (!seen.insert(s).second)
      throw std::invalid_argument("alphabet: duplicate symbol '" + s + "'");
  }
}

bool Alphabet::contains(std::string_view sym) const {
  for (const auto& s : symbols_)
    if (s == sym) return true;
  return false;
}

int Alphabet::index_of(std::string_view sym) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == sym) return static_cast<int>(i);
  throw std::invalid_argument("alphabet: unknown symbol '" + std::string(sym) + "'");
}

Word involutory_reduce(const Word& w, const std::vector<std::string>& killed) {
  auto is_killed = [&](const std::string& sym) {
    return std::find(killed.begin(), killed.end(), sym) != killed.end();
  };
  std::vector<std::string> stack;
  for (const auto& s : w.syllables()) {
    if (is_killed(s.sym)) continue;
    if (s.exp % 2 == 0) continue;
    if (!stack.empty() && stack.back() == s.sym)
      stack.pop_back();
    else
      stack.push_back(s.sym);
  }
  std::vector<Syllable> raw;
  raw.reserve(stack.size());
  for (auto& sym : stack) raw.push_back({std::move(sym), 1});
  return Word(std::move(raw));
}

Word prod(const std::string& x, const std::string& y, int k) {
  if (k < 0) throw std::invalid_argument("prod: negative length");
  if (x == y) throw std::invalid_argument("prod: equal symbols");
  std::vector<Syllable> raw;
  raw.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) raw.push_back({i % 2 == 0 ? x : y, 1});
  return Word(std::move(raw));
}

Word cyclic_reduce(const Word& w) {
  auto ls = w.letters();
  std::size_t lo = 0, hi = ls.size();
  while (hi - lo >= 2 && ls[lo].sym == ls[hi - 1].sym && ls[lo].sign == -ls[hi - 1].sign) {
    ++lo;
    --hi;
  }
  return Word::from_letters({ls.begin() + static_cast<long>(lo), ls.begin() + static_cast<long>(hi)});
}

std::vector<Word> cyclic_rotations(const Word& w) {
  auto ls = w.letters();
  if (ls.empty()) return {w};
  std::vector<Word> out;
  out.reserve(ls.size());
  for (std::size_t k = 0; k < ls.size(); ++k) {
    std::vector<Letter> rot(ls.begin() + static_cast<long>(k), ls.end());
    rot.insert(rot.end(), ls.begin(), ls.begin() + static_cast<long>(k));
    out.push_back(Word::from_letters(rot));
  }
  return out;
}

std::vector<std::string> support(const Word& w) {
  std::set<std::string> s;
  for (const auto& syl : w.syllables()) s.insert(syl.sym);
  return {s.begin(), s.end()};
}

std::vector<int> to_indexed(const Word& w, const Alphabet& alphabet) {
  std::vector<int> out;
  for (const auto& l : w.letters()) {
    int i = alphabet.index_of(l.sym) + 1;
    out.push_back(l.sign > 0 ? i : -i);
  }
  return out;
}

Word from_indexed(const std::vector<int>& letters, const Alphabet& alphabet) {
  std::vector<Letter> ls;
  ls.reserve(letters.size());
  for (int v : letters) {
    if (v == 0) throw std::invalid_argument("from_indexed: zero letter");
    int i = (v > 0 ? v : -v) - 1;
    ls.push_back({alphabet.at(static_cast<std::size_t>(i)), v > 0 ? 1 : -1});
  }
  return Word::from_letters(ls);
}

}  // namespace lot
