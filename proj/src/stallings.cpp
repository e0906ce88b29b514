#include "lot/stallings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace lot {

namespace {

// Core graph with deterministic labeled transitions after folding.
struct CoreGraph {
  // out[v][sym] / in[v][sym]: at most one edge per direction after folding.
  int nsym;
  std::vector<std::vector<int>> out, in;

  explicit CoreGraph(int nsym_) : nsym(nsym_) {}

  int add_vertex() {
    out.emplace_back(static_cast<std::size_t>(nsym), -1);
    in.emplace_back(static_cast<std::size_t>(nsym), -1);
    return static_cast<int>(out.size()) - 1;
  }
};

// Build the bouquet of generator loops and fold to a deterministic core.
CoreGraph folded_core(const Alphabet& alphabet, const std::vector<Word>& gens) {
  const int nsym = static_cast<int>(alphabet.size());
  // multigraph during construction
  struct Edge {
    int from, to, sym;
  };
  std::vector<Edge> edges;
  int nv = 1;  // base = 0
  for (const auto& g : gens) {
    int cur = 0;
    auto ls = g.letters();
    for (std::size_t i = 0; i < ls.size(); ++i) {
      int nxt = (i + 1 == ls.size()) ? 0 : nv++;
      int sym = alphabet.index_of(ls[i].sym);
      if (ls[i].sign > 0)
        edges.push_back({cur, nxt, sym});
      else
        edges.push_back({nxt, cur, sym});
      cur = nxt;
    }
  }

  // union-find folding
  std::vector<int> rep(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) rep[static_cast<std::size_t>(i)] = i;
  auto find = [&rep](int v) {
    while (rep[static_cast<std::size_t>(v)] != v) {
      rep[static_cast<std::size_t>(v)] =
          rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
      v = rep[static_cast<std::size_t>(v)];
    }
    return v;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> seen_out, seen_in;
    for (const auto& e : edges) {
      int f = find(e.from), t = find(e.to);
      auto [of, inserted_f] = seen_out.insert({{f, e.sym}, t});
      if (!inserted_f && find(of->second) != t) {
        rep[static_cast<std::size_t>(std::max(find(of->second), t))] =
            std::min(find(of->second), t);
        changed = true;
        break;
      }
      auto [it, inserted_t] = seen_in.insert({{t, e.sym}, f});
      if (!inserted_t && find(it->second) != f) {
        rep[static_cast<std::size_t>(std::max(find(it->second), f))] =
            std::min(find(it->second), f);
        changed = true;
        break;
      }
    }
  }

  // compact
  std::map<int, int> id;
  for (int v = 0; v < nv; ++v) {
    int r = find(v);
    if (!id.count(r)) {
      int fresh = static_cast<int>(id.size());
      id[r] = fresh;
    }
  }
  CoreGraph core(nsym);
  for (std::size_t i = 0; i < id.size(); ++i) core.add_vertex();
  for (const auto& e : edges) {
    int f = id[find(e.from)], t = id[find(e.to)];
    core.out[static_cast<std::size_t>(f)][static_cast<std::size_t>(e.sym)] = t;
    core.in[static_cast<std::size_t>(t)][static_cast<std::size_t>(e.sym)] = f;
  }
  // note: base 0 folds to id[find(0)], remapped below by the caller contract
  if (id[find(0)] != 0) {
    // swap labels so the base is vertex 0
    int b = id[find(0)];
    std::swap(core.out[0], core.out[static_cast<std::size_t>(b)]);
    std::swap(core.in[0], core.in[static_cast<std::size_t>(b)]);
    for (auto& row : core.out)
      for (auto& v : row) {
        if (v == 0)
          v = b;
        else if (v == b)
          v = 0;
      }
    for (auto& row : core.in)
      for (auto& v : row) {
        if (v == 0)
          v = b;
        else if (v == b)
          v = 0;
      }
  }
  return core;
}

bool trace_word(const CoreGraph& core, const Alphabet& alphabet, const Word& w) {
  int cur = 0;
  for (const auto& l : w.letters()) {
    int sym = alphabet.index_of(l.sym);
    int nxt = l.sign > 0 ? core.out[static_cast<std::size_t>(cur)][static_cast<std::size_t>(sym)]
                         : core.in[static_cast<std::size_t>(cur)][static_cast<std::size_t>(sym)];
    if (nxt == -1) return false;
    cur = nxt;
  }
  return cur == 0;
}

struct Tracked {
  Word value;
  std::vector<int> expr;  // in original generators, signed 1-based
};

std::vector<int> invert_expr(const std::vector<int>& e) {
  std::vector<int> out(e.rbegin(), e.rend());
  for (int& v : out) v = -v;
  return out;
}

std::vector<int> concat_expr(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int v : b) {
    if (!out.empty() && out.back() == -v)
      out.pop_back();
    else
      out.push_back(v);
  }
  return out;
}

// Nielsen reduction with expression tracking: repeatedly replace u_j by a
// strictly shorter u_i^e1 * u_j^e2 (result stored with positive orientation).
std::vector<Tracked> nielsen_reduce(std::vector<Tracked> u) {
  // drop trivial generators
  auto drop_trivial = [&u] {
    u.erase(std::remove_if(u.begin(), u.end(), [](const Tracked& t) { return t.value.empty(); }),
            u.end());
  };
  drop_trivial();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < u.size() && !changed; ++i) {
      for (std::size_t j = 0; j < u.size() && !changed; ++j) {
        if (i == j) continue;
        for (int e1 : {1, -1}) {
          for (int e2 : {1, -1}) {
            Word a = e1 > 0 ? u[i].value : u[i].value.inverse();
            Word b = e2 > 0 ? u[j].value : u[j].value.inverse();
            Word cand = a * b;
            if (cand.letter_length() < u[j].value.letter_length()) {
              std::vector<int> expr =
                  concat_expr(e1 > 0 ? u[i].expr : invert_expr(u[i].expr),
                              e2 > 0 ? u[j].expr : invert_expr(u[j].expr));
              if (e2 < 0) {
                cand = cand.inverse();
                expr = invert_expr(expr);
              }
              u[j] = {std::move(cand), std::move(expr)};
              drop_trivial();
              changed = true;
              break;
            }
          }
          if (changed) break;
        }
      }
    }
  }
  return u;
}

// Peel w into a product of the (Nielsen-reduced) generators by breadth-first
// search over left quotients, never letting the word grow.
std::optional<std::vector<int>> peel(const std::vector<Tracked>& u, const Word& w,
                                     std::size_t budget) {
  std::map<Word, std::pair<Word, int>> parent;  // word -> (previous word, move)
  std::deque<Word> queue{w};
  parent[w] = {w, 0};
  std::size_t states = 0;
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    if (cur.empty()) {
      std::vector<int> moves;
      Word back = cur;
      while (!(parent[back].second == 0)) {
        moves.push_back(parent[back].second);
        back = parent[back].first;
      }
      std::reverse(moves.begin(), moves.end());
      return moves;
    }
    if (++states > budget) return std::nullopt;
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (int e : {1, -1}) {
        Word g = e > 0 ? u[i].value : u[i].value.inverse();
        Word next = g.inverse() * cur;
        if (next.letter_length() > cur.letter_length()) continue;
        if (parent.count(next)) continue;
        parent[next] = {cur, e * (static_cast<int>(i) + 1)};
        queue.push_back(next);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

MembershipResult stallings_membership(const Alphabet& free_alphabet,
                                      const std::vector<Word>& gens, const Word& w) {
  for (const auto& g : gens)
    for (const auto& s : g.syllables())
      if (!free_alphabet.contains(s.sym))
        throw std::invalid_argument("stallings: generator uses unknown symbol '" + s.sym + "'");
  for (const auto& s : w.syllables())
    if (!free_alphabet.contains(s.sym))
      throw std::invalid_argument("stallings: word uses unknown symbol '" + s.sym + "'");

  CoreGraph core = folded_core(free_alphabet, gens);
  MembershipResult res;
  res.member = trace_word(core, free_alphabet, w);
  if (!res.member || w.empty()) return res;

  // factorization: Nielsen-reduce the generators with tracked expressions,
  // peel w against the reduced set, then translate.
  std::vector<Tracked> tracked;
  for (std::size_t i = 0; i < gens.size(); ++i) tracked.push_back({gens[i], {static_cast<int>(i) + 1}});
  std::vector<Tracked> reduced = nielsen_reduce(tracked);
  auto moves = peel(reduced, w, 2000000);
  if (!moves) throw std::logic_error("stallings: factorization search exhausted its budget");
  std::vector<int> expr;
  for (int mv : *moves) {
    const auto& t = reduced[static_cast<std::size_t>(std::abs(mv)) - 1];
    expr = concat_expr(expr, mv > 0 ? t.expr : invert_expr(t.expr));
  }
  res.factorization = std::move(expr);
  return res;
}

}  // namespace lot
