#pragma once

#include <string>
#include <vector>

#include "lot/coxeter.hpp"
#include "lot/lot.hpp"

namespace lot {

enum class LargenessVerdict { large, not_applicable };

struct LargenessCertificate {
  LargenessVerdict verdict = LargenessVerdict::not_applicable;
  std::string reason;             // failing hypothesis when not applicable
  std::vector<int> dihedral_types;
  std::string criterion;
};

/// A Coxeter-type tree LOT on >= 3 vertices with every dihedral type >= 3
/// maps onto an infinite tree of dihedral groups amalgamated over Z/2, which
/// contains a finite-index free subgroup of rank >= 2; the group is then
/// large.  Anything else is NOT_APPLICABLE with the failing hypothesis.
LargenessCertificate largeness_certificate(const Lot& lot);

}  // namespace lot
