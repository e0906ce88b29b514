#pragma once

#include <string>
#include <vector>

#include "lot/word.hpp"

namespace lot {

struct MembershipResult {
  bool member = false;
  /// Factorization of w as a product of the given generators, as signed
  /// 1-based generator indices; re-multiplies to a word freely equal to w.
  std::vector<int> factorization;
};

/// Membership of w in the subgroup of the free group on `free_alphabet`
/// generated by `gens`, via the folded core graph.  A positive answer comes
/// with a factorization recovered by Nielsen reduction of the generating set
/// followed by a bounded peeling search.
MembershipResult stallings_membership(const Alphabet& free_alphabet,
                                      const std::vector<Word>& gens, const Word& w);

}  // namespace lot
