#pragma once

// Shared helpers for assembling small configurations in tests.

#include <string>
#include <tuple>
#include <vector>

#include "folzar/config_io.hpp"
#include "folzar/surface.hpp"

namespace folzar::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FOLZAR_FIXTURE_DIR) + "/" + name;
}

inline ParsedDocument load_fixture(const std::string& name) {
  return load_document(fixture_path(name));
}

struct CurveSpec {
  std::string id;
  long long self_int = 0;
  bool invariant = false;
  long long kf_dot = 0;
  long long pa = 0;
  long long geom_genus = 0;
  std::vector<SingularityIncidence> sings;
  std::optional<Rat> delta;
};

inline Curve make_curve(const CurveSpec& s) {
  Curve c;
  c.id = s.id;
  c.self_int = s.self_int;
  c.pa = s.pa;
  c.geom_genus = s.geom_genus;
  c.invariant = s.invariant;
  c.kf_dot = s.kf_dot;
  c.singularities = s.sings;
  c.delta_coeff = s.delta;
  return c;
}

inline SingularityIncidence sing(const std::string& point, const Rat& cs,
                                 long long h = 1, bool reduced = true) {
  SingularityIncidence s;
  s.point_id = point;
  s.h = h;
  s.cs = cs;
  s.reduced_nondegenerate = reduced;
  return s;
}

// A chain head: one singularity, K_F.C = -1, CS sum = self-intersection.
inline CurveSpec head_curve(const std::string& id, long long self,
                            const std::string& point) {
  CurveSpec s;
  s.id = id;
  s.self_int = self;
  s.invariant = true;
  s.kf_dot = -1;
  s.sings = {sing(point, Rat(self))};
  return s;
}

inline CurveConfiguration make_config(
    const std::vector<CurveSpec>& specs,
    const std::vector<std::tuple<int, int, long long>>& inter,
    GlobalInvariants globals = {0, 1, true, {}}) {
  std::vector<Curve> curves;
  curves.reserve(specs.size());
  for (const auto& s : specs) curves.push_back(make_curve(s));
  return CurveConfiguration(std::move(curves), inter, std::move(globals));
}

// A standalone chain configuration with pairwise CS data matching the
// forward/backward residue recursion, suitable for validation and chain
// recognition tests. Curve ids are g1..gr; node k is named pk, the free
// singularity on the last curve q.
inline CurveConfiguration chain_config(const std::vector<long long>& e,
                                       GlobalInvariants globals = {0, 1, true, {}}) {
  const int r = static_cast<int>(e.size());
  std::vector<long long> mu(static_cast<std::size_t>(r) + 2, 0);
  mu[1] = 1;
  for (int i = 1; i <= r; ++i)
    mu[static_cast<std::size_t>(i) + 1] =
        e[static_cast<std::size_t>(i) - 1] * mu[static_cast<std::size_t>(i)] -
        mu[static_cast<std::size_t>(i) - 1];

  std::vector<CurveSpec> specs;
  std::vector<std::tuple<int, int, long long>> inter;
  for (int k = 1; k <= r; ++k) {
    CurveSpec s;
    s.id = "g" + std::to_string(k);
    s.self_int = -e[static_cast<std::size_t>(k) - 1];
    s.invariant = true;
    s.kf_dot = k == 1 ? -1 : 0;
    // Backward node CS = -mu_{k-1}/mu_k, forward CS = -mu_{k+1}/mu_k.
    if (k >= 2)
      s.sings.push_back(sing("p" + std::to_string(k - 1),
                             Rat::of(-mu[static_cast<std::size_t>(k) - 1],
                                     mu[static_cast<std::size_t>(k)])));
    s.sings.push_back(sing(k == r ? "q" : "p" + std::to_string(k),
                           Rat::of(-mu[static_cast<std::size_t>(k) + 1],
                                   mu[static_cast<std::size_t>(k)])));
    specs.push_back(std::move(s));
    if (k < r) inter.emplace_back(k - 1, k, 1);
  }
  return make_config(specs, inter, std::move(globals));
}

}  // namespace folzar::testing
