#include "folzar/index_theorems.hpp"

#include <set>

namespace folzar {

Rat verify_camacho_sad(const CurveConfiguration& config, int curve) {
  const Curve& c = config.curve(curve);
  if (!c.invariant)
    throw precondition_error("Camacho-Sad applies to invariant curves; '" + c.id +
                             "' is not invariant");
  Rat cs_sum(0);
  for (const auto& s : c.singularities) cs_sum += s.cs;
  return Rat(c.self_int) - cs_sum;
}

Rat verify_cln(const CurveConfiguration& config, int curve) {
  const Curve& c = config.curve(curve);
  if (!c.invariant)
    throw precondition_error("the index formula applies to invariant curves; '" +
                             c.id + "' is not invariant");
  long long h_sum = 0;
  for (const auto& s : c.singularities) h_sum += s.h;
  return Rat(2 - 2 * c.geom_genus + c.kf_dot) - Rat(h_sum);
}

std::vector<Rat> chain_cs_values(const HJData& hj) {
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(hj.r()));
  for (int k = 1; k <= hj.r(); ++k)
    out.push_back(Rat::of(detail::checked_neg(hj.mu[static_cast<std::size_t>(k) + 1]),
                          hj.mu[static_cast<std::size_t>(k)]));
  return out;
}

QDivisor e_of_curve(const CurveConfiguration& config, int curve,
                    const std::vector<DFChain>& chains) {
  QDivisor e;
  e.set(curve, Rat(1));
  for (const DFChain& df : chains) {
    const Chain& chain = df.chain;
    Vec a(chain.length());
    bool meets = false;
    for (int k = 0; k < chain.length(); ++k) {
      const long long m =
          config.inter(curve, chain.curve_indices[static_cast<std::size_t>(k)]);
      a(k) = Rat(m);
      if (m != 0) meets = true;
    }
    if (!meets) continue;
    const Vec beta = e_divisor(chain.hj, a);
    for (int k = 0; k < chain.length(); ++k)
      e.add(chain.curve_indices[static_cast<std::size_t>(k)], beta(k));
  }
  return e;
}

EcDivisorResult ec_divisor(const CurveConfiguration& config, int curve,
                           const AdjointParams& /*params*/,
                           const std::vector<DFChain>& chains) {
  const Curve& c = config.curve(curve);
  if (!c.invariant)
    throw precondition_error("residue closure of E(C) applies to invariant curves");
  for (const DFChain& df : chains)
    if (df.chain.contains(curve))
      throw precondition_error("'" + c.id + "' is a component of a maximal chain");

  const QDivisor e = e_of_curve(config, curve, chains);

  // Singular points of C shared with a chain component that C actually meets
  // are the attachment nodes; they are excluded from the residue sum.
  std::set<std::string> attachment_points;
  for (const DFChain& df : chains) {
    for (int g : df.chain.curve_indices) {
      if (config.inter(curve, g) == 0) continue;
      for (const auto& sg : config.curve(g).singularities)
        for (const auto& sc : c.singularities)
          if (sc.point_id == sg.point_id) attachment_points.insert(sc.point_id);
    }
  }

  Rat cs_outside(0);
  for (const auto& s : c.singularities)
    if (attachment_points.count(s.point_id) == 0) cs_outside += s.cs;

  return EcDivisorResult{e, intersection(config, e, e) - cs_outside};
}

EcDivisorResult ec_divisor(const CurveConfiguration& config, int curve,
                           const AdjointParams& params) {
  return ec_divisor(config, curve, params, maximal_df_chains(config, params));
}

}  // namespace folzar
