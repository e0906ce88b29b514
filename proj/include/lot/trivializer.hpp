#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lot/presentation.hpp"
#include "lot/word.hpp"

namespace lot {

struct TrivializerOptions {
  std::size_t max_states = 1000000;
  /// Intermediate words may exceed the start length by this many letters.
  long slack = 0;  // 0 = default: twice the longest relator
};

struct InsertionStep {
  std::size_t position = 0;
  Word inserted;  // a cyclic rotation of a relator or its inverse
};

enum class TrivializerVerdict { trivial, unknown };

struct TrivializeResult {
  TrivializerVerdict verdict = TrivializerVerdict::unknown;
  std::vector<InsertionStep> trace;
  std::size_t states = 0;
};

/// Semi-decision word problem: breadth-first search over relator insertions
/// (all symmetrized forms, all positions) followed by free reduction.
/// Exhausting the budget yields `unknown`, never "nontrivial".
TrivializeResult bounded_trivializer(const Presentation& p, const Word& w,
                                     const TrivializerOptions& opts = {});

}  // namespace lot
