#include "lot/lot.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "lot/errors.hpp"

namespace lot {

namespace {

bool connected_and_tree(std::size_t n, const std::vector<LotEdge>& edges) {
  if (n == 0) return false;
  bool any_loop = false;
  for (const auto& e : edges)
    if (e.src == e.dst) any_loop = true;
  if (any_loop) return false;
  if (edges.size() + 1 != n) return false;
  std::vector<std::vector<int>> adj(n);
  for (const auto& e : edges) {
    adj[static_cast<std::size_t>(e.src)].push_back(e.dst);
    adj[static_cast<std::size_t>(e.dst)].push_back(e.src);
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

Lot::Lot(Alphabet vertices, std::vector<LotEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int n = static_cast<int>(vertices_.size());
  if (n == 0) throw std::invalid_argument("lot: empty vertex set");
  std::set<std::tuple<int, int, Word>> seen;
  for (const auto& e : edges_) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("lot: edge endpoint out of range");
    for (const auto& s : e.label.syllables())
      if (!vertices_.contains(s.sym))
        throw std::invalid_argument("lot: edge word uses unknown symbol '" + s.sym + "'");
    if (!seen.insert({e.src, e.dst, e.label}).second)
      throw std::invalid_argument("lot: duplicate edge " + vertex_name(e.src) + " -[" +
                                  e.label.str() + "]-> " + vertex_name(e.dst));
  }
  kind_ = connected_and_tree(static_cast<std::size_t>(n), edges_) ? GraphKind::tree
                                                                  : GraphKind::general;
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

std::vector<std::string> split_items(const std::string& body) {
  std::vector<std::string> items;
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
  return items;
}

bool valid_symbol(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

struct RawEdge {
  std::string src, dst;
  Word label;
};

}  // namespace

Lot parse_lot(std::string_view text) {
  std::vector<std::string> order;
  auto declare = [&order](const std::string& sym) {
    if (std::find(order.begin(), order.end(), sym) == order.end()) order.push_back(sym);
  };

  std::vector<RawEdge> raw;
  for (const auto& item_raw : split_items(strip_comments(text))) {
    std::string item = trim(item_raw);
    if (item.empty()) continue;
    auto open = item.find("-[");
    if (open == std::string::npos) {
      if (!valid_symbol(item)) throw parse_error("lot: malformed item '" + item + "'");
      declare(item);
      continue;
    }
    auto close = item.find("]->", open);
    if (close == std::string::npos)
      throw parse_error("lot: missing ']->' in '" + item + "'");
    std::string src = trim(item.substr(0, open));
    std::string wtext = item.substr(open + 2, close - open - 2);
    std::string dst = trim(item.substr(close + 3));
    if (!valid_symbol(src) || !valid_symbol(dst))
      throw parse_error("lot: malformed endpoint in '" + item + "'");
    declare(src);
    declare(dst);
    raw.push_back({src, dst, Word::parse(wtext)});
  }
  if (order.empty()) throw parse_error("lot: empty input");

  Alphabet vertices(order);
  std::vector<LotEdge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    for (const auto& s : e.label.syllables())
      if (!vertices.contains(s.sym))
        throw parse_error("lot: unknown symbol '" + s.sym + "' in edge word '" + e.label.str() +
                          "'");
    edges.push_back({vertices.index_of(e.src), vertices.index_of(e.dst), e.label});
  }
  try {
    return Lot(std::move(vertices), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string print_lot(const Lot& lot) {
  const auto n = lot.vertices().size();
  std::vector<char> used(n, 0);
  for (const auto& e : lot.edges()) {
    used[static_cast<std::size_t>(e.src)] = 1;
    used[static_cast<std::size_t>(e.dst)] = 1;
  }
  // A bare declaration is needed for isolated vertices, and for all vertices
  // when edge order alone would not reproduce the vertex order.
  std::vector<std::string> appearance;
  auto note = [&appearance](const std::string& s) {
    if (std::find(appearance.begin(), appearance.end(), s) == appearance.end())
      appearance.push_back(s);
  };
  for (const auto& e : lot.edges()) {
    note(lot.vertex_name(e.src));
    note(lot.vertex_name(e.dst));
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!used[v]) note(lot.vertex_name(static_cast<int>(v)));
  bool order_ok = appearance == lot.vertices().symbols();

  std::string out;
  auto emit = [&out](const std::string& line) {
    if (!out.empty()) out += " ;\n";
    out += line;
  };
  if (!order_ok)
    for (const auto& v : lot.vertices().symbols()) emit(v);
  for (const auto& e : lot.edges())
    emit(lot.vertex_name(e.src) + " -[" + e.label.str() + "]-> " + lot.vertex_name(e.dst));
  if (order_ok)
    for (std::size_t v = 0; v < n; ++v)
      if (!used[v]) emit(lot.vertex_name(static_cast<int>(v)));
  out += "\n";
  return out;
}

Word edge_relator(const Lot& lot, int edge) {
  const auto& e = lot.edges().at(static_cast<std::size_t>(edge));
  Word x({{lot.vertex_name(e.src), 1}});
  Word y_inv({{lot.vertex_name(e.dst), -1}});
  return x * e.label * y_inv * e.label.inverse();
}

Presentation wirtinger_presentation(const Lot& lot) {
  Presentation p{lot.vertices(), {}};
  for (std::size_t i = 0; i < lot.edges().size(); ++i)
    p.relators.push_back(edge_relator(lot, static_cast<int>(i)));
  return p;
}

CoxeterTypeResult is_coxeter_type(const Lot& lot) {
  for (std::size_t i = 0; i < lot.edges().size(); ++i) {
    const auto& e = lot.edges()[i];
    const std::string& x = lot.vertex_name(e.src);
    const std::string& y = lot.vertex_name(e.dst);
    for (const auto& s : e.label.syllables()) {
      if (s.sym == x || s.sym == y) continue;
      if (s.exp % 2 != 0) return {false, static_cast<int>(i), s};
    }
  }
  return {};
}

LabelSeparationResult is_label_separated(const Lot& lot) {
  std::vector<std::vector<std::string>> supports;
  for (std::size_t i = 0; i < lot.edges().size(); ++i)
    supports.push_back(support(edge_relator(lot, static_cast<int>(i))));
  for (std::size_t i = 0; i < lot.edges().size(); ++i) {
    for (std::size_t j = i + 1; j < lot.edges().size(); ++j) {
      const auto& a = lot.edges()[i];
      const auto& b = lot.edges()[j];
      bool adjacent = a.src == b.src || a.src == b.dst || a.dst == b.src || a.dst == b.dst;
      if (!adjacent) continue;
      std::vector<std::string> inter;
      std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                            supports[j].end(), std::back_inserter(inter));
      if (inter == supports[i] || inter == supports[j])
        return {false, static_cast<int>(i), static_cast<int>(j), inter};
    }
  }
  return {};
}

namespace {

// Edges of the minimal subtree of a tree spanning S: prune non-S leaves.
std::vector<int> steiner_edges(const Lot& lot, const std::set<int>& s) {
  const auto n = lot.vertices().size();
  std::vector<char> alive_edge(lot.edges().size(), 1);
  std::vector<int> degree(n, 0);
  for (const auto& e : lot.edges()) {
    ++degree[static_cast<std::size_t>(e.src)];
    ++degree[static_cast<std::size_t>(e.dst)];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < lot.edges().size(); ++i) {
      if (!alive_edge[i]) continue;
      const auto& e = lot.edges()[i];
      for (int v : {e.src, e.dst}) {
        if (degree[static_cast<std::size_t>(v)] == 1 && !s.count(v)) {
          alive_edge[i] = 0;
          --degree[static_cast<std::size_t>(e.src)];
          --degree[static_cast<std::size_t>(e.dst)];
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < lot.edges().size(); ++i)
    if (alive_edge[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace

PrimeResult is_prime(const Lot& lot) {
  if (!lot.is_tree()) throw std::invalid_argument("is_prime: tree required");
  const int n = static_cast<int>(lot.vertices().size());
  for (std::size_t start = 0; start < lot.edges().size(); ++start) {
    std::set<int> s{lot.edges()[start].src, lot.edges()[start].dst};
    std::vector<int> sub_edges{static_cast<int>(start)};
    for (;;) {
      std::set<int> grown = s;
      for (int ei : sub_edges)
        for (const auto& sym : support(lot.edges()[static_cast<std::size_t>(ei)].label))
          grown.insert(lot.vertices().index_of(sym));
      std::vector<int> new_edges = steiner_edges(lot, grown);
      for (int ei : new_edges) {
        grown.insert(lot.edges()[static_cast<std::size_t>(ei)].src);
        grown.insert(lot.edges()[static_cast<std::size_t>(ei)].dst);
      }
      if (grown == s && new_edges == sub_edges) break;
      s = std::move(grown);
      sub_edges = std::move(new_edges);
    }
    if (static_cast<int>(s.size()) < n) {
      SubLotWitness w;
      w.vertices.assign(s.begin(), s.end());
      w.edges = sub_edges;
      return {false, std::move(w)};
    }
  }
  return {};
}

Lot reorient(const Lot& lot, const std::vector<SyllableRef>& flips) {
  std::vector<LotEdge> edges = lot.edges();
  for (const auto& f : flips) {
    if (f.edge < 0 || f.edge >= static_cast<int>(edges.size()))
      throw std::invalid_argument("reorient: edge index out of range");
    auto syls = edges[static_cast<std::size_t>(f.edge)].label.syllables();
    if (f.syllable < 0 || f.syllable >= static_cast<int>(syls.size()))
      throw std::invalid_argument("reorient: syllable index out of range");
    syls[static_cast<std::size_t>(f.syllable)].exp *= -1;
    edges[static_cast<std::size_t>(f.edge)].label = Word(std::move(syls));
  }
  return Lot(lot.vertices(), std::move(edges));
}

Lot reorient_all(const Lot& lot) {
  std::vector<LotEdge> edges = lot.edges();
  for (auto& e : edges) {
    auto syls = e.label.syllables();
    for (auto& s : syls) s.exp *= -1;
    e.label = Word(std::move(syls));
  }
  return Lot(lot.vertices(), std::move(edges));
}

}  // namespace lot
