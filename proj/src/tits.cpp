#include "lot/tits.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace lot {

namespace {

using LWord = std::vector<int>;  // letters as vertex indices

struct Engine {
  struct budget_overflow {};

  int n;
  std::vector<std::vector<int>> m;  // 0 = no relation
  std::size_t budget;

  Engine(const CoxeterGraph& g, std::size_t max_states)
      : n(static_cast<int>(g.vertices().size())),
        m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)),
        budget(max_states) {
    for (const auto& e : g.edges()) {
      if (e.m == 1)
        throw std::invalid_argument(
            "tits: m = 1 edge present; collapse unit edges before the word problem");
      m[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = e.m;
      m[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = e.m;
    }
  }

  // Rewrite the window [i, i+k) from prod(a,b,k) to prod(b,a,k).
  static LWord braid(const LWord& w, std::size_t i, int k) {
    LWord out = w;
    for (int j = 0; j + 1 < k; j += 2) std::swap(out[i + static_cast<std::size_t>(j)],
                                                 out[i + static_cast<std::size_t>(j) + 1]);
    if (k % 2 == 1) out[i + static_cast<std::size_t>(k) - 1] = w[i + static_cast<std::size_t>(k) - 2];
    return out;
  }

  // Explore the braid orbit of w.  If a deletion becomes possible anywhere,
  // return the shortened word; otherwise fill `orbit` and return nullopt.
  std::optional<LWord> orbit_or_shorten(const LWord& w, std::set<LWord>& orbit) {
    orbit.clear();
    std::queue<LWord> q;
    orbit.insert(w);
    q.push(w);
    while (!q.empty()) {
      LWord u = std::move(q.front());
      q.pop();
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == u[i + 1]) {
          LWord shorter;
          shorter.reserve(u.size() - 2);
          shorter.insert(shorter.end(), u.begin(), u.begin() + static_cast<long>(i));
          shorter.insert(shorter.end(), u.begin() + static_cast<long>(i) + 2, u.end());
          return shorter;
        }
      }
      for (std::size_t i = 0; i + 1 < u.size(); ++i) {
        int a = u[i], b = u[i + 1];
        if (a == b) continue;
        int k = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        if (k < 2 || i + static_cast<std::size_t>(k) > u.size()) continue;
        bool match = true;
        for (int j = 0; j < k; ++j)
          if (u[i + static_cast<std::size_t>(j)] != (j % 2 == 0 ? a : b)) {
            match = false;
            break;
          }
        if (!match) continue;
        LWord v = braid(u, i, k);
        if (orbit.insert(v).second) {
          if (orbit.size() > budget) throw budget_overflow{};
          q.push(v);
        }
      }
    }
    return std::nullopt;
  }

  // All reduced words equal to w, or nullopt on budget overflow.
  std::optional<std::set<LWord>> geodesic_orbit(LWord w) {
    try {
      for (;;) {
        std::set<LWord> orbit;
        auto shorter = orbit_or_shorten(w, orbit);
        if (!shorter) return orbit;
        w = std::move(*shorter);
      }
    } catch (budget_overflow&) {
      return std::nullopt;
    }
  }
};

LWord fold_letters(const CoxeterGraph& g, const Word& w) {
  LWord out;
  for (const auto& s : w.syllables()) {
    if (s.exp % 2 == 0) continue;
    out.push_back(g.vertices().index_of(s.sym));
  }
  LWord stack;
  for (int v : out) {
    if (!stack.empty() && stack.back() == v)
      stack.pop_back();
    else
      stack.push_back(v);
  }
  return stack;
}

Word to_word(const CoxeterGraph& g, const LWord& w) {
  std::vector<Syllable> raw;
  raw.reserve(w.size());
  for (int v : w) raw.push_back({g.vertex_name(v), 1});
  return Word(std::move(raw));
}

}  // namespace

Tri tits_is_identity(const CoxeterGraph& g, const Word& w, const TitsOptions& opts) {
  Engine eng(g, opts.max_states);
  auto orbit = eng.geodesic_orbit(fold_letters(g, w));
  if (!orbit) return Tri::unknown;
  return orbit->begin()->empty() ? Tri::yes : Tri::no;
}

std::optional<Word> tits_reduce(const CoxeterGraph& g, const Word& w, const TitsOptions& opts) {
  Engine eng(g, opts.max_states);
  auto orbit = eng.geodesic_orbit(fold_letters(g, w));
  if (!orbit) return std::nullopt;
  return to_word(g, *orbit->begin());
}

std::optional<Word> tits_canonical(const CoxeterGraph& g, const Word& w, const TitsOptions& opts) {
  Engine eng(g, opts.max_states);
  auto orbit = eng.geodesic_orbit(fold_letters(g, w));
  if (!orbit) return std::nullopt;
  return to_word(g, *std::min_element(orbit->begin(), orbit->end()));
}

Tri tits_equal(const CoxeterGraph& g, const Word& u, const Word& v, const TitsOptions& opts) {
  return tits_is_identity(g, u * v.inverse(), opts);
}

}  // namespace lot
