#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lot/presentation.hpp"
#include "lot/word.hpp"

namespace lot {

enum class TableStatus { closed, budget_exceeded };

/// Closed coset table: columns are generators and their inverses, rows are
/// cosets (0 is the subgroup).  Actions are total and mutually inverse.
class CosetTable {
 public:
  CosetTable(Alphabet gens, std::vector<std::vector<int>> rows, TableStatus status,
             std::vector<Word> subgroup_gens);

  const Alphabet& gens() const { return gens_; }
  TableStatus status() const { return status_; }
  std::size_t index() const { return rows_.size(); }
  const std::vector<Word>& subgroup_gens() const { return subgroup_gens_; }

  static int col(int gen, bool inverse) { return 2 * gen + (inverse ? 1 : 0); }
  int act(int coset, int column) const {
    return rows_[static_cast<std::size_t>(coset)][static_cast<std::size_t>(column)];
  }
  /// Image of a coset under a word (left-to-right scan).
  int trace(int coset, const Word& w) const;

 private:
  Alphabet gens_;
  std::vector<std::vector<int>> rows_;
  TableStatus status_;
  std::vector<Word> subgroup_gens_;
};

struct TcOptions {
  std::size_t max_cosets = 100000;
};

/// Deterministic HLT coset enumeration of the subgroup generated by
/// `subgroup_gens` in the group presented by p.  A closed table has
/// index() cosets; on budget exhaustion the returned table has status
/// budget_exceeded and must not be read as an answer.
CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens = {},
                        const TcOptions& opts = {});

/// Total verification scan: every relator fixes every coset and every
/// subgroup generator fixes coset 0.
bool verify_table(const CosetTable& table, const Presentation& p);

/// Shortest-word coset representatives from a BFS spanning tree.
std::vector<Word> coset_reps(const CosetTable& table);

/// CSV export, one row per coset, columns per generator and inverse.
std::string to_csv(const CosetTable& table);

}  // namespace lot
