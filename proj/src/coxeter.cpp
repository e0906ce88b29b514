#include "lot/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "lot/errors.hpp"

namespace lot {

namespace {

bool tree_shaped(std::size_t n, const std::vector<CoxEdge>& edges) {
  if (n == 0) return false;
  if (edges.size() + 1 != n) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

}  // namespace

CoxeterGraph::CoxeterGraph(Alphabet vertices, std::vector<CoxEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) throw std::invalid_argument("coxeter graph: empty vertex set");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.a < 0 || e.a >= n || e.b < 0 || e.b >= n)
      throw std::invalid_argument("coxeter graph: endpoint out of range");
    if (e.a == e.b) throw std::invalid_argument("coxeter graph: loop not allowed");
    if (e.m < 1) throw std::invalid_argument("coxeter graph: label must be >= 1");
    auto key = std::minmax(e.a, e.b);
    if (!seen.insert(key).second)
      throw std::invalid_argument("coxeter graph: multi-edge between " + vertex_name(e.a) +
                                  " and " + vertex_name(e.b));
  }
  is_tree_ = tree_shaped(static_cast<std::size_t>(n), edges_);
}

int CoxeterGraph::label(int a, int b) const {
  for (const auto& e : edges_)
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.m;
  return 0;
}

bool same_graph(const CoxeterGraph& a, const CoxeterGraph& b) {
  if (a.vertices() != b.vertices()) return false;
  auto norm = [](const CoxeterGraph& g) {
    std::set<std::tuple<int, int, int>> s;
    for (const auto& e : g.edges()) {
      auto [lo, hi] = std::minmax(e.a, e.b);
      s.insert({lo, hi, e.m});
    }
    return s;
  };
  return norm(a) == norm(b) && a.edges().size() == b.edges().size();
}

namespace {

std::string strip_comments(std::string_view text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    out += in_comment ? ' ' : c;
  }
  return out;
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

CoxeterGraph parse_coxeter_graph(std::string_view text) {
  std::vector<std::string> order;
  auto declare = [&order](const std::string& sym) {
    if (std::find(order.begin(), order.end(), sym) == order.end()) order.push_back(sym);
  };
  struct RawEdge {
    std::string a, b;
    int m;
  };
  std::vector<RawEdge> raw;

  std::string body = strip_comments(text);
  std::vector<std::string> items;
  {
    std::string cur;
    for (char c : body) {
      if (c == ';' || c == '\n') {
        items.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    items.push_back(cur);
  }
  for (const auto& item_raw : items) {
    std::string item = trim(item_raw);
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos) {
      if (!valid_symbol(item)) throw parse_error("coxeter: malformed item '" + item + "'");
      declare(item);
      continue;
    }
    std::string a = trim(item.substr(0, dash));
    std::size_t i = dash + 1;
    std::string digits;
    while (i < item.size() && std::isdigit(static_cast<unsigned char>(item[i]))) digits += item[i++];
    if (digits.empty() || i >= item.size() || item[i] != '-')
      throw parse_error("coxeter: malformed edge '" + item + "' (expected `x -m- y`)");
    std::string b = trim(item.substr(i + 1));
    if (!valid_symbol(a) || !valid_symbol(b))
      throw parse_error("coxeter: malformed endpoint in '" + item + "'");
    declare(a);
    declare(b);
    raw.push_back({a, b, std::stoi(digits)});
  }
  if (order.empty()) throw parse_error("coxeter: empty input");
  Alphabet vertices(order);
  std::vector<CoxEdge> edges;
  for (const auto& e : raw) edges.push_back({vertices.index_of(e.a), vertices.index_of(e.b), e.m});
  try {
    return CoxeterGraph(std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string print_coxeter_graph(const CoxeterGraph& g) {
  const auto n = g.vertices().size();
  std::vector<char> used(n, 0);
  std::string out;
  auto emit = [&out](const std::string& line) {
    if (!out.empty()) out += " ;\n";
    out += line;
  };
  for (const auto& e : g.edges()) {
    used[static_cast<std::size_t>(e.a)] = 1;
    used[static_cast<std::size_t>(e.b)] = 1;
    emit(g.vertex_name(e.a) + " -" + std::to_string(e.m) + "- " + g.vertex_name(e.b));
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) emit(g.vertex_name(static_cast<int>(v)));
  out += "\n";
  return out;
}

DihedralTypeInfo dihedral_type_word(const std::string& x, const std::string& y, const Word& w) {
  for (const auto& s : w.syllables())
    if (s.sym != x && s.sym != y && s.exp % 2 != 0)
      throw std::invalid_argument("dihedral_type: edge is not of Coxeter type (odd '" + s.sym +
                                  "' syllable)");
  Word relator = Word({{x, 1}}) * w * Word({{y, -1}}) * w.inverse();
  DihedralTypeInfo info;
  info.reduced = involutory_reduce(cyclic_reduce(relator));
  info.wbar = involutory_reduce(w);
  long len = info.reduced.letter_length();
  if (len % 2 != 0) throw std::logic_error("dihedral_type: odd reduced length");
  info.m = static_cast<int>(len / 2);
  if (info.m % 2 != 1) throw std::logic_error("dihedral_type: even dihedral type");
  if (info.wbar.letter_length() % 2 == 0) {
    info.even_reduction_note = true;
    info.note =
        "edge word reduces to an even-length alternating word; dihedral type taken from direct "
        "involutory reduction of the relator (closed-form case tables disagree on this case and "
        "are not used)";
  }
  return info;
}

DihedralTypeInfo dihedral_type(const Lot& lot, int edge) {
  const auto& e = lot.edges().at(static_cast<std::size_t>(edge));
  return dihedral_type_word(lot.vertex_name(e.src), lot.vertex_name(e.dst), e.label);
}

CoxeterGraph coxeter_tree_of(const Lot& lot) {
  auto ct = is_coxeter_type(lot);
  if (!ct.ok)
    throw std::invalid_argument("coxeter_tree_of: LOT is not of Coxeter type (edge " +
                                std::to_string(ct.edge) + ")");
  std::vector<CoxEdge> edges;
  for (std::size_t i = 0; i < lot.edges().size(); ++i) {
    const auto& e = lot.edges()[i];
    edges.push_back({e.src, e.dst, dihedral_type(lot, static_cast<int>(i)).m});
  }
  return CoxeterGraph(lot.vertices(), std::move(edges));
}

namespace {

Word base_edge_word(const std::string& x, const std::string& y, int m) {
  if (m == 1) return Word({{x, 1}});
  return prod(y, x, m - 1);  // (yx)^((m-1)/2), even length m-1
}

Word insert_square_after_first(const Word& w, const std::string& z) {
  auto syls = w.syllables();
  std::vector<Syllable> out;
  out.push_back(syls.at(0));
  out.push_back({z, 2});
  out.insert(out.end(), syls.begin() + 1, syls.end());
  return Word(std::move(out));
}

Word insert_all_squares_after_first(const Word& w, const std::vector<std::string>& zs) {
  auto syls = w.syllables();
  std::vector<Syllable> out;
  out.push_back(syls.at(0));
  for (const auto& z : zs) out.push_back({z, 2});
  out.insert(out.end(), syls.begin() + 1, syls.end());
  return Word(std::move(out));
}

}  // namespace

LotFromTreeResult lot_from_coxeter_tree(const CoxeterGraph& g, bool prime_padding) {
  if (!g.is_tree()) throw std::invalid_argument("lot_from_coxeter_tree: tree required");
  for (const auto& e : g.edges())
    if (e.m % 2 != 1)
      throw std::invalid_argument("lot_from_coxeter_tree: even label m=" + std::to_string(e.m));
  const int n = static_cast<int>(g.vertices().size());

  auto build = [&](int scheme) {
    // scheme 0: unpadded; 1: square of the cyclic successor of the target,
    // skipping endpoints; 2: squares of all outside vertices.
    std::vector<LotEdge> edges;
    for (const auto& e : g.edges()) {
      const std::string& x = g.vertex_name(e.a);
      const std::string& y = g.vertex_name(e.b);
      Word w = base_edge_word(x, y, e.m);
      if (scheme == 1) {
        int z = -1;
        for (int step = 1; step <= n; ++step) {
          int cand = (e.b + step) % n;
          if (cand != e.a && cand != e.b) {
            z = cand;
            break;
          }
        }
        w = insert_square_after_first(w, g.vertex_name(z));
      } else if (scheme == 2) {
        std::vector<std::string> zs;
        for (int v = 0; v < n; ++v)
          if (v != e.a && v != e.b) zs.push_back(g.vertex_name(v));
        w = insert_all_squares_after_first(w, zs);
      }
      edges.push_back({e.a, e.b, std::move(w)});
    }
    return Lot(g.vertices(), std::move(edges));
  };

  LotFromTreeResult result{build(0), false, false};
  if (prime_padding) {
    if (n < 3) {
      result.padding_warning = true;
    } else {
      Lot padded = build(1);
      if (!is_prime(padded).prime) padded = build(2);
      if (!is_prime(padded).prime)
        throw std::logic_error("lot_from_coxeter_tree: padding failed to produce a prime LOT");
      result.lot = std::move(padded);
      result.padded = true;
    }
  }
  if (!same_graph(coxeter_tree_of(result.lot), g))
    throw std::logic_error("lot_from_coxeter_tree: roundtrip check failed");
  return result;
}

Presentation coxeter_presentation(const CoxeterGraph& g) {
  Presentation p{g.vertices(), {}};
  for (const auto& x : g.vertices().symbols()) p.relators.push_back(Word({{x, 2}}));
  for (const auto& e : g.edges()) {
    if (e.m < 2) throw std::invalid_argument("coxeter_presentation: label m=1 not allowed");
    p.relators.push_back(prod(g.vertex_name(e.a), g.vertex_name(e.b), 2 * e.m));
  }
  return p;
}

Presentation artin_presentation(const CoxeterGraph& g) {
  Presentation p{g.vertices(), {}};
  for (const auto& e : g.edges()) {
    if (e.m < 2) throw std::invalid_argument("artin_presentation: label m=1 not allowed");
    const std::string& x = g.vertex_name(e.a);
    const std::string& y = g.vertex_name(e.b);
    p.relators.push_back(prod(x, y, e.m) * prod(y, x, e.m).inverse());
  }
  return p;
}

Lot log_from_coxeter_graph(const CoxeterGraph& g) {
  std::vector<LotEdge> edges;
  for (const auto& e : g.edges()) {
    if (e.m < 2) throw std::invalid_argument("log_from_coxeter_graph: label m=1 not allowed");
    const std::string& x = g.vertex_name(e.a);
    const std::string& y = g.vertex_name(e.b);
    if (e.m % 2 == 1) {
      edges.push_back({e.a, e.b, prod(y, x, e.m - 1)});
    } else {
      edges.push_back({e.a, e.a, prod(y, x, e.m - 1)});
    }
  }
  return Lot(g.vertices(), std::move(edges));
}

EpiLotResult epi_lot_for_coxeter(const CoxeterGraph& g) {
  const auto n = g.vertices().size();
  // BFS spanning tree over odd-labeled edges.
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    if (e.m % 2 == 1) {
      adj[static_cast<std::size_t>(e.a)].push_back({e.b, i});
      adj[static_cast<std::size_t>(e.b)].push_back({e.a, i});
    }
  }
  std::vector<char> seen(n, 0);
  std::vector<char> chosen(g.edges().size(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  std::size_t count = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    for (auto [u, ei] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(u)]) continue;
      seen[static_cast<std::size_t>(u)] = 1;
      chosen[ei] = 1;
      ++count;
      queue.push_back(u);
    }
  }
  if (count != n)
    throw std::invalid_argument(
        "epi_lot_for_coxeter: odd-labeled subgraph does not span (abelianization larger than "
        "Z/2)");
  std::vector<CoxEdge> tree_edges;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if (chosen[i]) tree_edges.push_back(g.edges()[i]);
  CoxeterGraph tree(g.vertices(), std::move(tree_edges));
  auto built = lot_from_coxeter_tree(tree, true);
  return {std::move(built.lot), std::move(tree), built.padded};
}

ForgeResult forge_high_rank_lot(int n) {
  if (n < 1) throw std::invalid_argument("forge: n must be >= 1");
  if (n > 20) throw std::invalid_argument("forge: n too large (max 20)");
  std::int64_t threshold = std::int64_t{6} << n;  // 6 * 2^n
  int m = static_cast<int>(threshold + 1);        // smallest odd >= threshold
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<CoxEdge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, m});
  CoxeterGraph tree(Alphabet(std::move(names)), std::move(edges));
  auto built = lot_from_coxeter_tree(tree, true);
  RankCertificate cert;
  cert.n = n;
  cert.threshold = threshold;
  cert.rank_established = true;
  cert.criterion = "carette-weidmann threshold (all labels >= 6*2^n) + odd-tree epimorphism";
  return {std::move(built.lot), std::move(tree), std::move(cert)};
}

CollapsedGraph collapse_unit_edges(const CoxeterGraph& g) {
  const auto n = g.vertices().size();
  std::vector<int> rep(n);
  for (std::size_t i = 0; i < n; ++i) rep[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (rep[static_cast<std::size_t>(v)] != v) {
      rep[static_cast<std::size_t>(v)] = rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(v)])];
      v = rep[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (const auto& e : g.edges())
    if (e.m == 1) {
      int ra = find(e.a), rb = find(e.b);
      if (ra != rb) rep[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
  std::vector<int> vmap(n, -1);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) {
    int r = find(static_cast<int>(v));
    if (vmap[static_cast<std::size_t>(r)] == -1) {
      vmap[static_cast<std::size_t>(r)] = static_cast<int>(names.size());
      names.push_back(g.vertex_name(r));
    }
    vmap[v] = vmap[static_cast<std::size_t>(r)];
  }
  std::map<std::pair<int, int>, int> labels;
  for (const auto& e : g.edges()) {
    if (e.m == 1) continue;
    int a = vmap[static_cast<std::size_t>(e.a)];
    int b = vmap[static_cast<std::size_t>(e.b)];
    if (a == b)
      throw std::invalid_argument("collapse_unit_edges: edge collapses to a loop");
    auto key = std::minmax(a, b);
    auto it = labels.find(key);
    if (it != labels.end() && it->second != e.m)
      throw std::invalid_argument("collapse_unit_edges: conflicting labels after collapse");
    labels[key] = e.m;
  }
  std::vector<CoxEdge> edges;
  for (const auto& [key, m] : labels) edges.push_back({key.first, key.second, m});
  return {CoxeterGraph(Alphabet(std::move(names)), std::move(edges)), std::move(vmap)};
}

}  // namespace lot
