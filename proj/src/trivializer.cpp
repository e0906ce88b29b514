#include "lot/trivializer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lot {

namespace {

std::vector<Word> symmetrized_relators(const Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const auto& r : p.relators) {
    Word c = cyclic_reduce(r);
    if (c.empty()) continue;
    for (const Word& base : {c, c.inverse()})
      for (const auto& rot : cyclic_rotations(base))
        if (seen.insert(rot).second) out.push_back(rot);
  }
  return out;
}

Word insert_at(const Word& w, std::size_t pos, const Word& ins) {
  auto ls = w.letters();
  auto il = ins.letters();
  std::vector<Letter> out;
  out.reserve(ls.size() + il.size());
  out.insert(out.end(), ls.begin(), ls.begin() + static_cast<long>(pos));
  out.insert(out.end(), il.begin(), il.end());
  out.insert(out.end(), ls.begin() + static_cast<long>(pos), ls.end());
  return Word::from_letters(out);
}

}  // namespace

TrivializeResult bounded_trivializer(const Presentation& p, const Word& w,
                                     const TrivializerOptions& opts) {
  validate_presentation(p);
  for (const auto& s : w.syllables())
    if (!p.gens.contains(s.sym))
      throw std::invalid_argument("trivializer: word uses unknown generator '" + s.sym + "'");

  TrivializeResult res;
  Word start = free_reduce(w.syllables());
  if (start.empty()) {
    res.verdict = TrivializerVerdict::trivial;
    return res;
  }
  std::vector<Word> sym = symmetrized_relators(p);
  if (sym.empty()) return res;  // free group: nonempty reduced word is nontrivial

  long maxrel = 0;
  for (const auto& r : sym) maxrel = std::max(maxrel, r.letter_length());
  long cap = start.letter_length() + (opts.slack > 0 ? opts.slack : 2 * maxrel);

  struct Parent {
    Word from;
    InsertionStep step;
  };
  std::map<Word, Parent> parent;
  std::deque<Word> queue{start};
  parent.emplace(start, Parent{});
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t len = static_cast<std::size_t>(cur.letter_length());
    for (const auto& r : sym) {
      for (std::size_t pos = 0; pos <= len; ++pos) {
        Word next = insert_at(cur, pos, r);
        if (next.letter_length() > cap) continue;
        if (parent.count(next)) continue;
        if (++res.states > opts.max_states) return res;  // unknown
        parent.emplace(next, Parent{cur, {pos, r}});
        if (next.empty()) {
          // reconstruct trace from start to empty
          std::vector<InsertionStep> trace;
          Word back = next;
          while (!(back == start)) {
            const Parent& pr = parent.at(back);
            trace.push_back(pr.step);
            back = pr.from;
          }
          std::reverse(trace.begin(), trace.end());
          res.verdict = TrivializerVerdict::trivial;
          res.trace = std::move(trace);
          return res;
        }
        queue.push_back(next);
      }
    }
  }
  return res;  // search space exhausted below the cap: still only "unknown"
}

}  // namespace lot
