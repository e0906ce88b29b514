#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lot/lot.hpp"
#include "lot/presentation.hpp"
#include "lot/word.hpp"

namespace lot {

struct CoxEdge {
  int a = -1;
  int b = -1;
  int m = 2;

  friend bool operator==(const CoxEdge&, const CoxEdge&) = default;
};

/// Simplicial graph with integer edge labels m >= 1.  m = 1 edges arise only
/// as dihedral types; Coxeter/Artin presentations require m >= 2.
class CoxeterGraph {
 public:
  CoxeterGraph(Alphabet vertices, std::vector<CoxEdge> edges);

  const Alphabet& vertices() const { return vertices_; }
  const std::vector<CoxEdge>& edges() const { return edges_; }
  bool is_tree() const { return is_tree_; }
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

  /// Label of the edge {a, b}, or 0 when absent (no relation).
  int label(int a, int b) const;

 private:
  Alphabet vertices_;
  std::vector<CoxEdge> edges_;
  bool is_tree_ = false;
};

/// Structural equality up to edge orientation and edge order.
bool same_graph(const CoxeterGraph& a, const CoxeterGraph& b);

/// DSL: `x -3- y ; y -3- z`; bare symbol declares an isolated vertex.
CoxeterGraph parse_coxeter_graph(std::string_view text);
std::string print_coxeter_graph(const CoxeterGraph& g);

struct DihedralTypeInfo {
  int m = 0;                      // odd
  Word reduced;                   // involutory image of the cyclically reduced relator
  Word wbar;                      // involutory image of the edge word
  bool even_reduction_note = false;
  std::string note;
};
/// Dihedral type of a Coxeter-type edge: half the length of the involutory
/// reduction of the cyclically reduced relator.  Always odd; computed by
/// direct group reduction.  Edge words whose involutory image has even length
/// carry a note (shortcut case formulas disagree there and are not used).
DihedralTypeInfo dihedral_type_word(const std::string& x, const std::string& y, const Word& w);
DihedralTypeInfo dihedral_type(const Lot& lot, int edge);

/// Erase orientations, label every edge with its dihedral type.
CoxeterGraph coxeter_tree_of(const Lot& lot);

struct LotFromTreeResult {
  Lot lot;
  bool padded = false;
  bool padding_warning = false;  // padding requested but impossible (< 3 vertices)
};
/// Inverse construction: a Coxeter-type LOT whose Coxeter tree is the given
/// odd-labeled tree.  Edge {x,y} oriented x -> y with word (yx)^((m-1)/2)
/// (word `x` when m = 1).  With prime_padding, a square of an outside vertex
/// is inserted into each edge word and primality is verified before
/// returning.
LotFromTreeResult lot_from_coxeter_tree(const CoxeterGraph& g, bool prime_padding);

/// <x | x^2, (xy)^m per edge>; requires every m >= 2.
Presentation coxeter_presentation(const CoxeterGraph& g);
/// <x | prod(x,y,m) = prod(y,x,m) per edge>; requires every m >= 2.
Presentation artin_presentation(const CoxeterGraph& g);

/// Labeled oriented graph whose Wirtinger presentation equals the Artin
/// presentation of g: odd edges become x -[(yx)^((m-1)/2)]-> y, even edges
/// become loops x -[prod(y,x,m-1)]-> x.  Requires every m >= 2.
Lot log_from_coxeter_graph(const CoxeterGraph& g);

struct EpiLotResult {
  Lot lot;
  CoxeterGraph spanning_tree;
  bool padded = false;
};
/// A prime Coxeter-type LOT mapping onto W(g), built from a spanning tree of
/// the odd-labeled subgraph.  Throws std::invalid_argument when the odd
/// subgraph does not span (the abelianization is then bigger than Z/2).
EpiLotResult epi_lot_for_coxeter(const CoxeterGraph& g);

struct RankCertificate {
  int n = 0;
  std::int64_t threshold = 0;  // 6 * 2^n
  bool rank_established = false;
  std::string criterion;
};

struct ForgeResult {
  Lot lot;
  CoxeterGraph tree;
  RankCertificate certificate;
};
/// Path-shaped Coxeter tree on n vertices, every label the smallest odd
/// integer >= 6*2^n, prime-padded; the certificate pins rank = n via the
/// Carette-Weidmann threshold plus the odd-tree epimorphism.
ForgeResult forge_high_rank_lot(int n);

struct CollapsedGraph {
  CoxeterGraph graph;
  std::vector<int> vertex_map;  // old vertex -> new vertex
};
/// Identify endpoints of every m = 1 edge (x = y collapses the generators);
/// throws std::invalid_argument if conflicting labels collide.
CollapsedGraph collapse_unit_edges(const CoxeterGraph& g);

}  // namespace lot
