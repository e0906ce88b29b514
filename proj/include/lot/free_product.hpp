#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lot/todd_coxeter.hpp"
#include "lot/word.hpp"

namespace lot {

/// One cyclic free factor; order 0 means infinite (Z).
struct FreeFactor {
  std::string sym;
  std::uint64_t order = 0;
};

/// Normal form in the free product of cyclic groups: alternating nontrivial
/// factor syllables with balanced exponent representatives (e.g. y^-2, not
/// y^3, in Z/5).  Idempotent and multiplicative.
Word free_product_normal_form(const std::vector<FreeFactor>& factors, const Word& w);

enum class FreenessVerdict {
  free_of_rank,
  torsion_witness,
  no_relation_up_to_bound,
  relation_witness,
};

struct FreenessReport {
  FreenessVerdict verdict{};
  long rank = -1;
  long index = -1;
  long chi_num = 0, chi_den = 1;  // Euler characteristic of the ambient
  Word witness;                   // torsion element or relation, when relevant
  std::vector<int> relation;      // relation as signed generator indices (1-based)
};

/// Freeness of the finite-index subgroup recorded by a closed coset table
/// over a free product of cyclics: torsion-free iff every finite-order
/// generator acts with full-length cycles; then rank = 1 - index * chi,
/// cross-checked against the cycle structure of the quotient graph.
FreenessReport freeness_via_graph_of_groups(const CosetTable& table,
                                            const std::vector<FreeFactor>& factors);

/// Desk-scale falsification: evaluate every freely reduced word of length
/// <= bound in the abstract generators; report the first relation found or
/// no_relation_up_to_bound.
FreenessReport bounded_freeness_check(const std::vector<FreeFactor>& factors,
                                      const std::vector<Word>& gens, int bound);

struct AmalgamKernelReport {
  bool free = false;           // vertex groups inject into the quotient
  long index = 0;              // order of the finite quotient
  long va = 0, vb = 0;         // quotient-graph vertices of each type
  long edges = 0;              // quotient-graph edges
  long valency_a = 0, valency_b = 0;
  long chi = 0;                // va + vb - edges
  long rank = 0;               // 1 - chi when free
  bool connected = false;
};

/// Kernel of A *_C B -> Q where Q is given by a coset table over the trivial
/// subgroup: the kernel acts on the Bass-Serre tree with quotient graph
/// (A-orbits) u (B-orbits) joined along C-orbits.  `a_order` etc. are the
/// abstract orders used to certify injectivity.
AmalgamKernelReport amalgam_kernel_freeness(const CosetTable& q,
                                            const std::vector<std::string>& a_gens,
                                            const std::vector<std::string>& b_gens,
                                            const std::vector<std::string>& c_gens,
                                            std::uint64_t a_order, std::uint64_t b_order,
                                            std::uint64_t c_order);

}  // namespace lot
