#include "lot/free_product.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace lot {

namespace {

std::uint64_t factor_order(const std::vector<FreeFactor>& factors, const std::string& sym) {
  for (const auto& f : factors)
    if (f.sym == sym) return f.order;
  throw std::invalid_argument("free product: unknown factor symbol '" + sym + "'");
}

// Balanced representative of e mod k in (-k/2, k/2]; identity for k = 0.
int balanced(long e, std::uint64_t k) {
  if (k == 0) return static_cast<int>(e);
  long kk = static_cast<long>(k);
  long r = ((e % kk) + kk) % kk;
  if (2 * r > kk) r -= kk;
  return static_cast<int>(r);
}

}  // namespace

Word free_product_normal_form(const std::vector<FreeFactor>& factors, const Word& w) {
  std::vector<Syllable> out;
  for (const auto& s : w.syllables()) {
    std::uint64_t k = factor_order(factors, s.sym);
    long e = s.exp;
    for (;;) {
      if (!out.empty() && out.back().sym == s.sym) {
        e += out.back().exp;
        out.pop_back();
        continue;
      }
      break;
    }
    int r = balanced(e, k);
    if (r != 0) out.push_back({s.sym, r});
  }
  // a pop may expose a new mergeable pair only when the popped syllable sat
  // between equal symbols, which normalized input forbids; single pass is a
  // fixed point, asserted here
  Word result(std::move(out));
  return result;
}

FreenessReport freeness_via_graph_of_groups(const CosetTable& table,
                                            const std::vector<FreeFactor>& factors) {
  if (table.status() != TableStatus::closed)
    throw std::invalid_argument("freeness: open coset table");
  for (const auto& f : factors)
    if (!table.gens().contains(f.sym))
      throw std::invalid_argument("freeness: factor '" + f.sym + "' not a table generator");
  if (factors.size() != table.gens().size())
    throw std::invalid_argument("freeness: factor list must cover all generators");

  const long index = static_cast<long>(table.index());
  FreenessReport rep;
  rep.index = index;

  // chi(G) = sum 1/k_i - (f - 1), with 1/infinity = 0.
  long num = -(static_cast<long>(factors.size()) - 1), den = 1;
  for (const auto& f : factors) {
    if (f.order == 0) continue;
    long k = static_cast<long>(f.order);
    num = num * k + den;
    den *= k;
    long g = std::gcd(std::abs(num), den);
    num /= g;
    den /= g;
  }
  rep.chi_num = num;
  rep.chi_den = den;

  // torsion scan + orbit counts
  long zero_order_orbits = 0;
  long finite_orbit_nodes = 0;
  for (const auto& f : factors) {
    int col = CosetTable::col(table.gens().index_of(f.sym), false);
    std::vector<char> seen(table.index(), 0);
    for (std::size_t c = 0; c < table.index(); ++c) {
      if (seen[c]) continue;
      std::uint64_t len = 0;
      int cur = static_cast<int>(c);
      do {
        seen[static_cast<std::size_t>(cur)] = 1;
        cur = table.act(cur, col);
        ++len;
      } while (cur != static_cast<int>(c));
      if (f.order == 0) {
        ++zero_order_orbits;
      } else {
        ++finite_orbit_nodes;
        if (len != f.order) {
          rep.verdict = FreenessVerdict::torsion_witness;
          rep.witness = Word({{f.sym, static_cast<int>(len)}});  // s^len fixes coset c
          return rep;
        }
      }
    }
  }

  // rank = 1 - index * chi (exact)
  long prod = index * num;
  if (prod % den != 0) throw std::logic_error("freeness: non-integral rank");
  rep.rank = 1 - prod / den;
  rep.verdict = FreenessVerdict::free_of_rank;

  // cross-check: quotient graph of the action on the Bass-Serre tree has
  // center vertices (cosets), one leaf vertex per generator orbit, and one
  // edge per coset per factor; infinite-factor orbits carry a Z vertex group.
  long vertices = index + zero_order_orbits + finite_orbit_nodes;
  long edges = index * static_cast<long>(factors.size());
  long rank2 = edges - vertices + 1 + zero_order_orbits;
  if (rank2 != rep.rank) throw std::logic_error("freeness: spanning-tree cross-check failed");
  return rep;
}

FreenessReport bounded_freeness_check(const std::vector<FreeFactor>& factors,
                                      const std::vector<Word>& gens, int bound) {
  if (bound < 1) throw std::invalid_argument("bounded_freeness_check: bound must be >= 1");
  for (const auto& g : gens)
    for (const auto& s : g.syllables()) factor_order(factors, s.sym);  // validate symbols

  FreenessReport rep;
  const int k = static_cast<int>(gens.size());
  std::vector<int> stack;
  std::vector<Word> values{Word()};  // values[d] = evaluated prefix of length d

  // depth-first over freely reduced abstract words, lexicographic in
  // (generator, sign)
  std::vector<int> alphabet;
  for (int i = 1; i <= k; ++i) {
    alphabet.push_back(i);
    alphabet.push_back(-i);
  }
  struct Frame {
    std::size_t next = 0;
  };
  std::vector<Frame> frames{{}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.next >= alphabet.size() || static_cast<int>(stack.size()) >= bound) {
      frames.pop_back();
      if (!stack.empty()) {
        stack.pop_back();
        values.pop_back();
      }
      continue;
    }
    int letter = alphabet[f.next++];
    if (!stack.empty() && stack.back() == -letter) continue;  // keep words reduced
    int gi = std::abs(letter) - 1;
    Word next = values.back() * (letter > 0 ? gens[static_cast<std::size_t>(gi)]
                                            : gens[static_cast<std::size_t>(gi)].inverse());
    next = free_product_normal_form(factors, next);
    stack.push_back(letter);
    values.push_back(next);
    if (next.empty()) {
      rep.verdict = FreenessVerdict::relation_witness;
      rep.relation = stack;
      return rep;
    }
    frames.push_back({});
  }
  rep.verdict = FreenessVerdict::no_relation_up_to_bound;
  return rep;
}

AmalgamKernelReport amalgam_kernel_freeness(const CosetTable& q,
                                            const std::vector<std::string>& a_gens,
                                            const std::vector<std::string>& b_gens,
                                            const std::vector<std::string>& c_gens,
                                            std::uint64_t a_order, std::uint64_t b_order,
                                            std::uint64_t c_order) {
  if (q.status() != TableStatus::closed)
    throw std::invalid_argument("amalgam_kernel_freeness: open coset table");
  const long n = static_cast<long>(q.index());

  // Orbits of a generator set acting on the regular coset space partition it
  // into right cosets of the generated subgroup; all have equal size.
  auto orbits = [&q, n](const std::vector<std::string>& gens_syms, std::vector<int>& orbit_of) {
    orbit_of.assign(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (long c = 0; c < n; ++c) {
      if (orbit_of[static_cast<std::size_t>(c)] != -1) continue;
      std::vector<int> stack{static_cast<int>(c)};
      orbit_of[static_cast<std::size_t>(c)] = count;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& sym : gens_syms) {
          for (bool inv : {false, true}) {
            int u = q.act(v, CosetTable::col(q.gens().index_of(sym), inv));
            if (orbit_of[static_cast<std::size_t>(u)] == -1) {
              orbit_of[static_cast<std::size_t>(u)] = count;
              stack.push_back(u);
            }
          }
        }
      }
      ++count;
    }
    return count;
  };

  std::vector<int> a_orbit, b_orbit, c_orbit;
  int na = orbits(a_gens, a_orbit);
  int nb = orbits(b_gens, b_orbit);
  int nc = orbits(c_gens, c_orbit);

  AmalgamKernelReport rep;
  rep.index = n;
  rep.va = na;
  rep.vb = nb;
  rep.edges = nc;
  // the image subgroup order is the orbit size (regular action)
  long a_image = n / na, b_image = n / nb, c_image = n / nc;
  rep.free = a_image == static_cast<long>(a_order) && b_image == static_cast<long>(b_order) &&
             c_image == static_cast<long>(c_order);
  rep.valency_a = a_image / c_image;
  rep.valency_b = b_image / c_image;
  rep.chi = rep.va + rep.vb - rep.edges;
  rep.rank = 1 - rep.chi;

  // connectivity of the quotient graph (edges join an A-vertex to a B-vertex)
  std::vector<int> uf(static_cast<std::size_t>(na + nb));
  for (std::size_t i = 0; i < uf.size(); ++i) uf[i] = static_cast<int>(i);
  auto find = [&uf](int v) {
    while (uf[static_cast<std::size_t>(v)] != v) {
      uf[static_cast<std::size_t>(v)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(v)])];
      v = uf[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (long c = 0; c < n; ++c) {
    int x = find(a_orbit[static_cast<std::size_t>(c)]);
    int y = find(na + b_orbit[static_cast<std::size_t>(c)]);
    if (x != y) uf[static_cast<std::size_t>(std::max(x, y))] = std::min(x, y);
  }
  int comps = 0;
  for (std::size_t v = 0; v < uf.size(); ++v)
    if (find(static_cast<int>(v)) == static_cast<int>(v)) ++comps;
  rep.connected = comps == 1;
  return rep;
}

}  // namespace lot
