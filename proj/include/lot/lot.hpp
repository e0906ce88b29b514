#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lot/presentation.hpp"
#include "lot/word.hpp"

namespace lot {

struct LotEdge {
  int src = -1;
  int dst = -1;
  Word label;

  friend bool operator==(const LotEdge&, const LotEdge&) = default;
};

enum class GraphKind { tree, general };

/// A word-labeled oriented graph.  `kind() == tree` iff the underlying
/// undirected graph is connected, acyclic and loop-free; loops and parallel
/// edges are representable in general kind only.  Every edge label uses only
/// vertex symbols.
class Lot {
 public:
  Lot(Alphabet vertices, std::vector<LotEdge> edges);

  const Alphabet& vertices() const { return vertices_; }
  const std::vector<LotEdge>& edges() const { return edges_; }
  GraphKind kind() const { return kind_; }
  bool is_tree() const { return kind_ == GraphKind::tree; }
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

  friend bool operator==(const Lot&, const Lot&) = default;

 private:
  Alphabet vertices_;
  std::vector<LotEdge> edges_;
  GraphKind kind_ = GraphKind::general;
};

/// DSL: one edge per `;` or newline, `<src> -[<word>]-> <dst>`; a bare symbol
/// declares an isolated vertex; `#` starts a comment.  Vertex order is by
/// first appearance of an endpoint or bare declaration.
Lot parse_lot(std::string_view text);
std::string print_lot(const Lot& lot);

/// The relator x w y^-1 w^-1 of edge i, freely reduced.
Word edge_relator(const Lot& lot, int edge);

/// One relator per edge over the vertex generators; deficiency 1 on trees.
Presentation wirtinger_presentation(const Lot& lot);

struct CoxeterTypeResult {
  bool ok = true;
  int edge = -1;        // first violating edge
  Syllable witness;     // the odd outside syllable
};
/// True iff in every edge word each syllable of a symbol other than the
/// edge's endpoints has even exponent.
CoxeterTypeResult is_coxeter_type(const Lot& lot);

struct LabelSeparationResult {
  bool ok = true;
  int e1 = -1, e2 = -1;  // first violating adjacent pair
  std::vector<std::string> intersection;
};
/// True iff for every pair of edges sharing a vertex the relator supports
/// intersect in a proper subset of both.
LabelSeparationResult is_label_separated(const Lot& lot);

struct SubLotWitness {
  std::vector<int> vertices;  // sorted
  std::vector<int> edges;     // induced subtree edges, sorted
};

struct PrimeResult {
  bool prime = true;
  std::optional<SubLotWitness> witness;
};
/// Closure-based prime check (trees only): for each edge, grow the smallest
/// subtree containing it that is closed under edge-word support; prime iff
/// every closure is the whole tree.
PrimeResult is_prime(const Lot& lot);

struct SyllableRef {
  int edge = 0;
  int syllable = 0;
};
/// Flip the exponent sign of the selected syllable occurrences.
Lot reorient(const Lot& lot, const std::vector<SyllableRef>& flips);
/// Flip every exponent in every edge word.
Lot reorient_all(const Lot& lot);

}  // namespace lot
