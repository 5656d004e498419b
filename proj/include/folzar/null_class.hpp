#pragma once

#include <string>
#include <utility>
#include <vector>

#include "folzar/chains.hpp"
#include "folzar/surface.hpp"
#include "folzar/zariski.hpp"

namespace folzar {

enum class NullTag {
  fchain_1_1,
  fchain_1_2,
  fchain_1_3,
  cyclic_z2_chain,
  dihedral_tree,
  egl_nodal,
  egl_cycle,
  case_c,
  case_d,
  case_e,
  case_f,
  case_g,
  noncanonical_5,
  unclassified
};

enum class SingularityType { cyclic_quotient, dihedral_quotient, cusp, non_lc_point, none };

std::string to_string(NullTag t);
std::string to_string(SingularityType t);

// Classification verdict for one connected null-locus component, with the
// per-curve predicates that witnessed the match.
struct NullComponentClass {
  NullTag tag = NullTag::unclassified;
  SingularityType singularity_type = SingularityType::none;
  std::vector<std::pair<int, std::string>> evidence;  // curve index (-1 = component)
};

// Curves whose positive-part pairing vanishes, in configuration order.
std::vector<int> null_locus(const CurveConfiguration& config, const ZariskiResult& z);

// Connected components of a curve set under the intersection graph.
std::vector<std::vector<int>> connected_components(const CurveConfiguration& config,
                                                   const std::vector<int>& curves);

// Matches the component against the contraction taxonomy: chain variants,
// index-2 chains, dihedral forks, elliptic Gorenstein leaves, the boundary
// cases around non-invariant centers, and Unclassified as honest fallback.
NullComponentClass classify_component(const CurveConfiguration& config,
                                      const AdjointParams& params,
                                      const std::vector<int>& component,
                                      const ZariskiResult& z,
                                      const std::vector<DFChain>& df_chains);

struct FundamentalCycle {
  QDivisor cycle;      // positive integral coefficients
  long long pa = 0;    // 1 + (Z^2 + K_X.Z)/2
};

// Minimal positive integral cycle with Z.Gamma <= 0 on every component curve,
// grown by single-curve increments. The component must have negative-definite
// intersection matrix.
FundamentalCycle fundamental_cycle(const CurveConfiguration& config,
                                   const std::vector<int>& component);

struct EglAdvisory {
  bool attached = false;
  std::string note;
};

// Records the non-torsion assumption carried by elliptic Gorenstein leaves;
// suppressed with an ampleness note when the boundary meets the leaf.
EglAdvisory egl_torsion_guard(const CurveConfiguration& config,
                              const AdjointParams& params,
                              const std::vector<int>& component,
                              const NullComponentClass& verdict);

}  // namespace folzar
