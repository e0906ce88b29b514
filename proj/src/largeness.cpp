#include "lot/largeness.hpp"

namespace lot {

LargenessCertificate largeness_certificate(const Lot& lot) {
  LargenessCertificate cert;
  cert.criterion = "epimorphism onto an infinite tree of dihedral groups over Z/2 edges";
  if (!lot.is_tree()) {
    cert.reason = "not a tree";
    return cert;
  }
  auto ct = is_coxeter_type(lot);
  if (!ct.ok) {
    cert.reason = "not of Coxeter type (edge " + std::to_string(ct.edge) + ")";
    return cert;
  }
  for (std::size_t i = 0; i < lot.edges().size(); ++i)
    cert.dihedral_types.push_back(dihedral_type(lot, static_cast<int>(i)).m);
  if (lot.vertices().size() < 3) {
    cert.reason = "fewer than 3 vertices";
    return cert;
  }
  for (std::size_t i = 0; i < cert.dihedral_types.size(); ++i)
    if (cert.dihedral_types[i] < 3) {
      cert.reason = "dihedral type m = " + std::to_string(cert.dihedral_types[i]) + " on edge " +
                    std::to_string(i) + " (need m >= 3)";
      return cert;
    }
  cert.verdict = LargenessVerdict::large;
  return cert;
}

}  // namespace lot
