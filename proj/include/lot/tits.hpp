#pragma once

#include <cstddef>
#include <optional>

#include "lot/coxeter.hpp"
#include "lot/word.hpp"

namespace lot {

struct TitsOptions {
  std::size_t max_states = 500000;
};

enum class Tri { yes, no, unknown };

/// Word problem for W(g) by braid-move saturation: delete adjacent equal
/// letters, saturate under prod(x,y,m) <-> prod(y,x,m), repeat.  Length never
/// increases and bounded-length orbits are finite, so this terminates; the
/// state cap converts overflow into `unknown`, never a wrong answer.
/// Requires every edge label >= 2 (collapse m = 1 edges first) and w over the
/// vertices of g; exponents are folded mod 2.
Tri tits_is_identity(const CoxeterGraph& g, const Word& w, const TitsOptions& opts = {});

/// Some geodesic (reduced) word representing w, or nullopt on budget.
std::optional<Word> tits_reduce(const CoxeterGraph& g, const Word& w,
                                const TitsOptions& opts = {});

/// The lexicographically least geodesic word for w (vertex order of g), or
/// nullopt on budget.  Canonical: equal group elements get equal words.
std::optional<Word> tits_canonical(const CoxeterGraph& g, const Word& w,
                                   const TitsOptions& opts = {});

/// Whether u and v represent the same element of W(g).
Tri tits_equal(const CoxeterGraph& g, const Word& u, const Word& v,
               const TitsOptions& opts = {});

}  // namespace lot
