#include "folzar/null_class.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <set>

namespace folzar {

std::string to_string(NullTag t) {
  switch (t) {
    case NullTag::fchain_1_1: return "FChain-1-1";
    case NullTag::fchain_1_2: return "FChain-1-2";
    case NullTag::fchain_1_3: return "FChain-1-3";
    case NullTag::cyclic_z2_chain: return "CyclicZ2Chain";
    case NullTag::dihedral_tree: return "DihedralTree";
    case NullTag::egl_nodal: return "EGL-nodal";
    case NullTag::egl_cycle: return "EGL-cycle";
    case NullTag::case_c: return "Case-C";
    case NullTag::case_d: return "Case-D";
    case NullTag::case_e: return "Case-E";
    case NullTag::case_f: return "Case-F";
    case NullTag::case_g: return "Case-G";
    case NullTag::noncanonical_5: return "NonCanonical-5";
    case NullTag::unclassified: return "Unclassified";
  }
  return "?";
}

std::string to_string(SingularityType t) {
  switch (t) {
    case SingularityType::cyclic_quotient: return "cyclic-quotient";
    case SingularityType::dihedral_quotient: return "dihedral-quotient";
    case SingularityType::cusp: return "cusp";
    case SingularityType::non_lc_point: return "non-lc-point";
    case SingularityType::none: return "none";
  }
  return "?";
}

std::vector<int> null_locus(const CurveConfiguration& config, const ZariskiResult& z) {
  std::vector<int> out;
  for (int c = 0; c < config.size(); ++c)
    if (z.positive_dots.at(c).is_zero()) out.push_back(c);
  return out;
}

std::vector<std::vector<int>> connected_components(const CurveConfiguration& config,
                                                   const std::vector<int>& curves) {
  std::vector<std::vector<int>> components;
  std::set<int> todo(curves.begin(), curves.end());
  while (!todo.empty()) {
    std::vector<int> comp{*todo.begin()};
    todo.erase(todo.begin());
    std::vector<int> frontier = comp;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int a : frontier) {
        for (auto it = todo.begin(); it != todo.end();) {
          if (config.inter(a, *it) != 0) {
            next.push_back(*it);
            comp.push_back(*it);
            it = todo.erase(it);
          } else {
            ++it;
          }
        }
      }
      frontier = std::move(next);
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

namespace {

using Evidence = std::vector<std::pair<int, std::string>>;

bool smooth_rational_invariant(const Curve& c) {
  return c.invariant && c.pa == 0 && c.geom_genus == 0;
}

long long z_index(const Curve& c) { return c.kf_dot + 2 - 2 * c.pa; }

bool reduced_singularities(const Curve& c) {
  return std::all_of(c.singularities.begin(), c.singularities.end(),
                     [](const SingularityIncidence& s) { return s.reduced_nondegenerate; });
}

// Orders the component as a simple path under the intersection graph.
// Requires all multiplicities <= 1, exactly two degree-1 ends (or size 1),
// and the edge count of a tree path.
std::optional<std::vector<int>> order_as_path(const CurveConfiguration& config,
                                              const std::vector<int>& comp) {
  if (comp.size() == 1) return comp;
  std::vector<int> ends;
  int edges = 0;
  for (int a : comp) {
    int degree = 0;
    for (int b : comp) {
      if (a == b) continue;
      const long long m = config.inter(a, b);
      if (m > 1) return std::nullopt;
      if (m == 1) ++degree;
    }
    edges += degree;
    if (degree == 1) ends.push_back(a);
    if (degree == 0 || degree > 2) return std::nullopt;
  }
  edges /= 2;
  if (ends.size() != 2 || edges != static_cast<int>(comp.size()) - 1)
    return std::nullopt;

  std::vector<int> order{std::min(ends[0], ends[1])};
  std::set<int> used{order.front()};
  while (order.size() < comp.size()) {
    int next = -1;
    for (int b : comp) {
      if (used.count(b)) continue;
      if (config.inter(order.back(), b) == 1) {
        next = b;
        break;
      }
    }
    if (next < 0) return std::nullopt;
    order.push_back(next);
    used.insert(next);
  }
  return order;
}

// Recognizes the component as an F-chain and returns it oriented from the
// canonical-pairing -1 end.
std::optional<Chain> component_as_f_chain(const CurveConfiguration& config,
                                          const std::vector<int>& comp) {
  auto path = order_as_path(config, comp);
  if (!path) return std::nullopt;
  for (int c : *path) {
    const Curve& cv = config.curve(c);
    if (!smooth_rational_invariant(cv) || cv.self_int > -2 || !reduced_singularities(cv) ||
        cv.singularities.empty())
      return std::nullopt;
  }
  auto kf = [&](int c) { return config.curve(c).kf_dot; };
  if (path->size() == 1) {
    if (kf(path->front()) != -1) return std::nullopt;
  } else {
    const bool head_front = kf(path->front()) == -1;
    const bool head_back = kf(path->back()) == -1;
    if (head_front == head_back) return std::nullopt;  // exactly one -1 end
    if (head_back) std::reverse(path->begin(), path->end());
    for (std::size_t i = 1; i < path->size(); ++i)
      if (kf((*path)[i]) != 0) return std::nullopt;
  }

  std::vector<long long> e;
  e.reserve(path->size());
  for (int c : *path) e.push_back(-config.curve(c).self_int);
  return Chain{*path, hj_sequences(e)};
}

bool equals_df_chain(const std::vector<int>& curves, const DFChain& df) {
  std::vector<int> a = curves;
  std::vector<int> b = df.chain.curve_indices;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

NullComponentClass verdict(NullTag tag, SingularityType st, Evidence evidence) {
  return NullComponentClass{tag, st, std::move(evidence)};
}

std::optional<NullComponentClass> try_fchain_family(const CurveConfiguration& config,
                                                    const AdjointParams& params,
                                                    const std::vector<int>& comp,
                                                    const std::vector<DFChain>& df_chains) {
  auto chain = component_as_f_chain(config, comp);
  if (!chain) return std::nullopt;
  const int r = chain->length();
  Evidence ev;
  for (int k = 0; k < r; ++k) {
    const int c = chain->curve_indices[static_cast<std::size_t>(k)];
    ev.emplace_back(c, "chain position " + std::to_string(k + 1) + ", self-intersection " +
                           std::to_string(config.curve(c).self_int));
  }

  for (const DFChain& df : df_chains) {
    if (equals_df_chain(comp, df)) {
      ev.emplace_back(-1, "component equals a maximal (D,F)-chain");
      return verdict(NullTag::fchain_1_1, SingularityType::cyclic_quotient, ev);
    }
  }

  const Vec d = chain_d_dots(config, *chain, params);
  bool tail_zero_from_2 = true;
  for (int k = 1; k < r; ++k) tail_zero_from_2 = tail_zero_from_2 && d(k).is_zero();
  if (d(0) == Rat(1) && tail_zero_from_2) {
    ev.emplace_back(chain->curve_indices.front(), "D.Gamma_1 = 1");
    if (r == 1)
      return verdict(NullTag::case_c, SingularityType::cyclic_quotient, ev);
    return verdict(NullTag::fchain_1_2, SingularityType::cyclic_quotient, ev);
  }

  // Leading (D,F)-sub-chain followed by the pairing-matched next curve and
  // zero pairings beyond it.
  Rat s(0);
  int t = 0;
  while (t < r) {
    const Rat next = s + Rat::of(chain->hj.mu[static_cast<std::size_t>(t) + 1], 1) * d(t);
    if (!(next < Rat(1))) break;
    s = next;
    ++t;
  }
  if (t >= 1 && t < r) {
    Chain prefix;
    prefix.curve_indices.assign(chain->curve_indices.begin(),
                                chain->curve_indices.begin() + t);
    prefix.hj = hj_sequences(std::vector<long long>(chain->hj.e.begin(),
                                                    chain->hj.e.begin() + t));
    bool prefix_is_maximal = false;
    for (const DFChain& df : df_chains)
      prefix_is_maximal = prefix_is_maximal || equals_df_chain(prefix.curve_indices, df);
    if (prefix_is_maximal) {
      const Vec m = m_d_divisor(prefix.hj, d.head(t));
      const Rat gamma_t = m(t - 1);  // pairing with Gamma_{t+1}, which meets Gamma_t once
      bool rest_zero = true;
      for (int k = t + 1; k < r; ++k) rest_zero = rest_zero && d(k).is_zero();
      if (d(t) == gamma_t && rest_zero) {
        ev.emplace_back(-1, "leading " + std::to_string(t) +
                                "-curve sub-chain is a maximal (D,F)-chain");
        ev.emplace_back(chain->curve_indices[static_cast<std::size_t>(t)],
                        "D.Gamma equals the sub-chain pairing " + gamma_t.str());
        if (t + 1 == r)
          return verdict(NullTag::case_e, SingularityType::cyclic_quotient, ev);
        return verdict(NullTag::fchain_1_3, SingularityType::cyclic_quotient, ev);
      }
    }
  }
  return std::nullopt;
}

std::optional<NullComponentClass> try_z2_chain(const CurveConfiguration& config,
                                               const AdjointParams& params,
                                               const std::vector<int>& comp) {
  auto path = order_as_path(config, comp);
  if (!path) return std::nullopt;
  Evidence ev;
  for (int c : *path) {
    const Curve& cv = config.curve(c);
    if (!smooth_rational_invariant(cv) || cv.self_int > -2 || z_index(cv) != 2 ||
        !d_dot(config, params, c).is_zero())
      return std::nullopt;
    ev.emplace_back(c, "Z(F,Gamma) = 2, D.Gamma = 0, self-intersection " +
                           std::to_string(cv.self_int));
  }
  if (comp.size() == 1)
    return verdict(NullTag::case_d, SingularityType::cyclic_quotient, ev);
  return verdict(NullTag::cyclic_z2_chain, SingularityType::cyclic_quotient, ev);
}

std::optional<NullComponentClass> try_dihedral(const CurveConfiguration& config,
                                               const AdjointParams& params,
                                               const std::vector<int>& comp,
                                               const ZariskiResult& z) {
  if (comp.size() < 3) return std::nullopt;
  std::vector<int> tips;
  std::vector<int> center_candidates;
  std::vector<int> tail;
  for (int c : comp) {
    const Curve& cv = config.curve(c);
    if (!smooth_rational_invariant(cv) || !d_dot(config, params, c).is_zero())
      return std::nullopt;
    const long long zi = z_index(cv);
    if (zi == 1)
      tips.push_back(c);
    else if (zi == 3)
      center_candidates.push_back(c);
    else if (zi == 2)
      tail.push_back(c);
    else
      return std::nullopt;
  }
  if (tips.size() != 2 || center_candidates.size() != 1) return std::nullopt;
  const int center = center_candidates.front();
  if (config.curve(center).self_int > -2) return std::nullopt;

  Evidence ev;
  for (int tip : tips) {
    if (config.curve(tip).self_int != -2) return std::nullopt;
    if (config.inter(tip, center) != 1) return std::nullopt;
    for (int other : comp)
      if (other != center && other != tip && config.inter(tip, other) != 0)
        return std::nullopt;
    ev.emplace_back(tip, "(-2) tip with Z(F,Gamma) = 1 meeting the center once");
  }
  ev.emplace_back(center, "center with Z(F,Gamma) = 3");

  // The remaining curves must form the tail chain hanging off the center.
  if (!tail.empty()) {
    std::vector<int> tail_plus_center = tail;
    tail_plus_center.push_back(center);
    std::sort(tail_plus_center.begin(), tail_plus_center.end());
    auto path = order_as_path(config, tail_plus_center);
    if (!path) return std::nullopt;
    if (path->front() != center && path->back() != center) return std::nullopt;
    for (int c : tail) {
      if (config.curve(c).self_int > -2) return std::nullopt;
      ev.emplace_back(c, "tail curve with Z(F,Gamma) = 2");
    }
  }

  if (tail.empty()) {
    // The fork with no tail carries the half-half restriction data.
    for (int tip : tips)
      if (z.negative.coeff(tip) != Rat(1, 2)) return std::nullopt;
    ev.emplace_back(-1, "negative part restricts to 1/2 + 1/2 on the center");
    return verdict(NullTag::case_f, SingularityType::dihedral_quotient, ev);
  }
  return verdict(NullTag::dihedral_tree, SingularityType::dihedral_quotient, ev);
}

std::optional<NullComponentClass> try_egl_nodal(const CurveConfiguration& config,
                                                const AdjointParams& params,
                                                const std::vector<int>& comp) {
  if (comp.size() != 1) return std::nullopt;
  const int c = comp.front();
  const Curve& cv = config.curve(c);
  if (!cv.invariant || cv.pa != 1 || cv.geom_genus != 0 || cv.self_int >= 0)
    return std::nullopt;
  if (!d_dot(config, params, c).is_zero()) return std::nullopt;
  if (cv.singularities.size() != 1 || cv.singularities.front().h != 2)
    return std::nullopt;
  Evidence ev;
  ev.emplace_back(c, "nodal invariant rational curve (p_a = 1, g = 0) with D.Z = 0; "
                     "the node is the only singularity");
  return verdict(NullTag::egl_nodal, SingularityType::cusp, ev);
}

std::optional<NullComponentClass> try_egl_cycle(const CurveConfiguration& config,
                                                const AdjointParams& params,
                                                const std::vector<int>& comp) {
  if (comp.size() < 2) return std::nullopt;
  Evidence ev;
  for (int c : comp) {
    const Curve& cv = config.curve(c);
    if (!smooth_rational_invariant(cv) || cv.self_int > -2 || cv.kf_dot != 0 ||
        !d_dot(config, params, c).is_zero())
      return std::nullopt;
    long long degree = 0;
    for (int b : comp)
      if (b != c) degree += config.inter(c, b);
    if (degree != 2) return std::nullopt;
    // Every singularity on the curve must be a node of the cycle.
    if (cv.singularities.size() != 2) return std::nullopt;
    for (const auto& s : cv.singularities) {
      bool shared = false;
      for (int b : comp) {
        if (b == c || config.inter(c, b) == 0) continue;
        for (const auto& sb : config.curve(b).singularities)
          shared = shared || sb.point_id == s.point_id;
      }
      if (!shared) return std::nullopt;
    }
    ev.emplace_back(c, "cycle member, self-intersection " + std::to_string(cv.self_int) +
                           ", singularities at the nodes only");
  }
  ev.emplace_back(-1, "cycle of invariant rational curves with D.Z = 0");
  return verdict(NullTag::egl_cycle, SingularityType::cusp, ev);
}

std::optional<NullComponentClass> try_case_g(const CurveConfiguration& config,
                                             const AdjointParams& params,
                                             const std::vector<int>& comp,
                                             const ZariskiResult& z,
                                             const std::vector<DFChain>& df_chains) {
  if (comp.size() != 3) return std::nullopt;
  int center = -1;
  for (int c : comp) {
    const Curve& cv = config.curve(c);
    if (cv.invariant && cv.self_int == -1 && cv.kf_dot == 1 && cv.pa == 0) center = c;
  }
  if (center < 0) return std::nullopt;
  if (d_dot(config, params, center) != Rat(-1, 4)) return std::nullopt;

  std::vector<int> arms;
  for (int c : comp)
    if (c != center) arms.push_back(c);
  if (config.inter(arms[0], arms[1]) != 0) return std::nullopt;
  for (int a : arms) {
    if (config.inter(center, a) != 1) return std::nullopt;
    bool is_df = false;
    for (const DFChain& df : df_chains)
      is_df = is_df || equals_df_chain({a}, df);
    if (!is_df) return std::nullopt;
  }
  // One (-2) arm with D.Gamma = 0 and weight 1/2, one (-3) arm with
  // D.Gamma = 1/4 and weight 1/4.
  auto arm_matches = [&](int a, long long self, const Rat& d_val, const Rat& coeff) {
    return config.curve(a).self_int == self && d_dot(config, params, a) == d_val &&
           z.negative.coeff(a) == coeff;
  };
  int two = -1, three = -1;
  for (int a : arms) {
    if (arm_matches(a, -2, Rat(0), Rat(1, 2))) two = a;
    if (arm_matches(a, -3, Rat(1, 4), Rat(1, 4))) three = a;
  }
  if (two < 0 || three < 0 || two == three) return std::nullopt;

  Evidence ev;
  ev.emplace_back(center, "invariant (-1)-curve with K_F.C = 1 and D.C = -1/4");
  ev.emplace_back(two, "(-2) chain with D.Gamma = 0 and coefficient 1/2");
  ev.emplace_back(three, "(-3) chain with D.Gamma = 1/4 and coefficient 1/4");
  if (params.epsilon == Rat(1, 4)) ev.emplace_back(-1, "epsilon = 1/4");
  return verdict(NullTag::case_g, SingularityType::non_lc_point, ev);
}

std::optional<NullComponentClass> try_noncanonical5(const CurveConfiguration& config,
                                                    const AdjointParams& params,
                                                    const std::vector<int>& comp) {
  int center = -1;
  for (int c : comp) {
    if (!config.curve(c).invariant) {
      if (center >= 0) return std::nullopt;
      center = c;
    }
  }
  if (center < 0) return std::nullopt;
  const Curve& cc = config.curve(center);
  if (params.delta_of(config, center) != Rat(1)) return std::nullopt;
  if (cc.kf_dot + cc.self_int != 0 || cc.self_int >= 0) return std::nullopt;

  Evidence ev;
  ev.emplace_back(center,
                  "non-invariant boundary component with coefficient 1 and "
                  "tang(F,C) = 0");

  std::vector<int> rest;
  for (int c : comp)
    if (c != center) rest.push_back(c);
  for (const std::vector<int>& arm : connected_components(config, rest)) {
    auto chain = component_as_f_chain(config, arm);
    if (!chain) return std::nullopt;
    // The center meets each chain exactly once, at its first curve, which
    // carries boundary pairing 1; later components pair to zero.
    for (int k = 0; k < chain->length(); ++k) {
      const int g = chain->curve_indices[static_cast<std::size_t>(k)];
      const long long m = config.inter(center, g);
      const Rat dg = d_dot(config, params, g);
      if (k == 0) {
        if (m != 1 || dg != Rat(1)) return std::nullopt;
      } else {
        if (m != 0 || !dg.is_zero()) return std::nullopt;
      }
    }
    ev.emplace_back(chain->curve_indices.front(),
                    "chain of length " + std::to_string(chain->length()) +
                        " attached at its first curve with D.Gamma_1 = 1");
  }
  ev.emplace_back(-1, "contraction is log canonical but not canonical");
  return verdict(NullTag::noncanonical_5, SingularityType::none, ev);
}

}  // namespace

NullComponentClass classify_component(const CurveConfiguration& config,
                                      const AdjointParams& params,
                                      const std::vector<int>& component,
                                      const ZariskiResult& z,
                                      const std::vector<DFChain>& df_chains) {
  for (int c : component) {
    if (!z.positive_dots.at(c).is_zero())
      throw precondition_error("component contains '" + config.curve(c).id +
                               "' with nonzero positive-part pairing");
  }

  if (!is_negative_definite(config.gram(component))) {
    Evidence ev;
    ev.emplace_back(-1, "component intersection matrix is not negative definite; "
                        "the component cannot be contracted");
    return verdict(NullTag::unclassified, SingularityType::none, ev);
  }

  if (auto v = try_fchain_family(config, params, component, df_chains)) return *v;
  if (auto v = try_z2_chain(config, params, component)) return *v;
  if (auto v = try_dihedral(config, params, component, z)) return *v;
  if (auto v = try_egl_nodal(config, params, component)) return *v;
  if (auto v = try_egl_cycle(config, params, component)) return *v;
  if (auto v = try_case_g(config, params, component, z, df_chains)) return *v;
  if (auto v = try_noncanonical5(config, params, component)) return *v;

  Evidence ev;
  ev.emplace_back(-1, "no taxonomy template matched");
  return verdict(NullTag::unclassified, SingularityType::none, ev);
}

FundamentalCycle fundamental_cycle(const CurveConfiguration& config,
                                   const std::vector<int>& component) {
  if (component.empty()) throw precondition_error("empty component has no cycle");
  if (!is_negative_definite(config.gram(component)))
    throw precondition_error(
        "component intersection matrix is not negative definite; no fundamental "
        "cycle exists");

  std::map<int, long long> coeff;
  for (int c : component) coeff[c] = 1;
  auto pairing = [&](int g) {
    long long total = 0;
    for (const auto& [c, m] : coeff) total += m * config.inter(c, g);
    return total;
  };
  for (long long guard = 0;; ++guard) {
    if (guard > 100000)
      throw std::logic_error("fundamental cycle iteration failed to terminate");
    int grow = -1;
    for (int c : component) {
      if (pairing(c) > 0) {
        grow = c;
        break;
      }
    }
    if (grow < 0) break;
    ++coeff[grow];
  }

  FundamentalCycle out;
  long long self = 0;
  long long kx = 0;
  for (const auto& [c, m] : coeff) {
    out.cycle.set(c, Rat(m));
    kx += m * config.kx_dot(c);
    for (const auto& [c2, m2] : coeff) self += m * m2 * config.inter(c, c2);
  }
  out.pa = 1 + (self + kx) / 2;
  return out;
}

EglAdvisory egl_torsion_guard(const CurveConfiguration& config,
                              const AdjointParams& params,
                              const std::vector<int>& component,
                              const NullComponentClass& verdict) {
  EglAdvisory out;
  if (verdict.tag != NullTag::egl_nodal && verdict.tag != NullTag::egl_cycle) {
    out.attached = false;
    out.note = "component is not an elliptic Gorenstein leaf; no advisory";
    return out;
  }
  Rat delta_pairing(0);
  for (int g : component) {
    for (int i = 0; i < config.size(); ++i) {
      const Rat a = params.delta_of(config, i);
      if (!a.is_zero()) delta_pairing += a * Rat(config.inter(i, g));
    }
  }
  if (delta_pairing.is_positive()) {
    out.attached = false;
    out.note = "boundary meets the leaf (Delta pairing " + delta_pairing.str() +
               "); torsion advisory suppressed and the contracted adjoint class "
               "is ample on the image";
    return out;
  }
  out.attached = true;
  out.note = "assumes the positive part restricts to a non-torsion class on the "
             "leaf; not decidable from intersection data";
  return out;
}

}  // namespace folzar
