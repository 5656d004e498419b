#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "folzar/bounds.hpp"
#include "folzar/zariski.hpp"
#include "support/builders.hpp"

using namespace folzar;
using namespace folzar::testing;

TEST_CASE("integrality index") {
  AdjointParams zero;
  {
    const CurveConfiguration config = make_config({head_curve("G", -2, "p")}, {});
    QDivisor n;
    n.set(0, Rat(1, 2));
    CHECK(integrality_index(config, zero, n) == 2);
  }
  {
    const ParsedDocument doc = load_fixture("quarter_example.json");
    const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
    CHECK(integrality_index(doc.config, doc.params, z.negative) == 4);
  }
  {
    const ParsedDocument doc = load_fixture("single_chain_23.json");
    const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
    CHECK(integrality_index(doc.config, doc.params, z.negative) == 5);
  }
}

TEST_CASE("alpha floor") {
  CHECK(alpha_bound(Rat(1), Rat(1)) == 6);
  CHECK(alpha_bound(Rat(1), Rat(0)) == 3);
  CHECK(alpha_bound(Rat(4), Rat(-2)) == 6);
  CHECK_THROWS_AS(alpha_bound(Rat(0), Rat(1)), precondition_error);
  CHECK_THROWS_AS(alpha_bound(Rat(-1), Rat(1)), precondition_error);
}

TEST_CASE("twisted threshold quantity") {
  CHECK(m_frak(Rat(1), Rat(1), Rat(0)) == Rat(9, 4));
  CHECK(m_frak(Rat(2), Rat(0), Rat(-1)) == Rat(3, 4));

  // Twisting by -2 Z1 along a pa = 1 cycle leaves the value unchanged:
  // T.A = 0 and (K_X - T)^2 = K_X^2 because Z^2 + K_X.Z = 0.
  std::mt19937 rng(811);
  std::uniform_int_distribution<long long> small(-6, 6);
  for (int iter = 0; iter < 300; ++iter) {
    const Rat a_self(std::abs(small(rng)) + 1);
    const Rat a_kx(small(rng));
    const Rat kx_self(small(rng));
    const Rat z_self(-(std::abs(small(rng)) + 1));
    const Rat z_kx = -z_self;  // pa = 1 cycle: K_X.Z = -Z^2
    const Rat t_dot_a(0);
    const Rat t_dot_kx = Rat(-2) * z_kx;
    const Rat t_self = Rat(4) * z_self;
    CHECK(m_frak(a_self, a_kx, kx_self, t_dot_a, t_dot_kx, t_self) ==
          m_frak(a_self, a_kx, kx_self));
  }
}

TEST_CASE("thresholds") {
  Thresholds t = thresholds(2, 6);
  CHECK(t.vanishing == 14);
  CHECK(t.birational == 18);
  t = thresholds(1, 3);
  CHECK(t.vanishing == 4);
  CHECK(t.birational == 6);
  t = thresholds(5, 0);
  CHECK(t.vanishing == 5);
  CHECK(t.birational == 15);
}

TEST_CASE("dimension polynomial") {
  CHECK(rr_dimension(0, Rat(2), Rat(0), 1) == Rat(1));
  CHECK(rr_dimension(4, Rat(2), Rat(0), 1) == Rat(17));
  CHECK(rr_dimension(6, Rat(1), Rat(2), 0) == Rat(12));
}

TEST_CASE("dimension polynomial second difference") {
  std::mt19937 rng(812);
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 6);
  std::uniform_int_distribution<long long> step(1, 12);
  for (int iter = 0; iter < 500; ++iter) {
    const Rat vol(std::abs(num(rng)) + 1, den(rng));
    const Rat kx_p(num(rng), den(rng));
    const long long chi = num(rng);
    const long long m = step(rng);
    const long long h = step(rng);
    const Rat second = rr_dimension(m + 2 * h, vol, kx_p, chi) -
                       Rat(2) * rr_dimension(m + h, vol, kx_p, chi) +
                       rr_dimension(m, vol, kx_p, chi);
    CHECK(second == vol * Rat(h) * Rat(h));
  }
}

TEST_CASE("very-ampleness multiple for positive epsilon") {
  CHECK(n_frak(Rat(1, 4), 4, Rat(1)) == 24);
  CHECK(n_frak(Rat(1, 2), 2, Rat(1)) == 12);
  // Shrinking epsilon at fixed index and volume never lowers the multiple.
  CHECK(n_frak(Rat(1, 8), 2, Rat(1)) >= n_frak(Rat(1, 4), 2, Rat(1)));
  CHECK(n_frak(Rat(1, 16), 2, Rat(1)) >= n_frak(Rat(1, 8), 2, Rat(1)));
  CHECK_THROWS_AS(n_frak(Rat(0), 2, Rat(1)), precondition_error);
}

TEST_CASE("index inequality check") {
  CHECK(hodge_check(Rat(1), Rat(-1), Rat(0), true));
  CHECK_FALSE(hodge_check(Rat(2), Rat(2), Rat(1), true));
  CHECK(hodge_check(Rat(1), Rat(1), Rat(1), true));
  CHECK_THROWS_AS(hodge_check(Rat(1), Rat(1), Rat(1), false), precondition_error);
}

TEST_CASE("pseudo-effectivity slope") {
  CHECK(beta_ha(Rat(1), Rat(0)) == Rat(1));
  CHECK(beta_ha(Rat(2), Rat(3)) == Rat(4));
  CHECK(beta_ha(Rat(1), Rat(-1)) == Rat(-1));
  CHECK_THROWS_AS(beta_ha(Rat(0), Rat(1)), precondition_error);
}

TEST_CASE("alpha dominates the untwisted bound under the nef witness") {
  std::mt19937 rng(813);
  std::uniform_int_distribution<long long> num(-12, 12);
  std::uniform_int_distribution<long long> den(1, 4);
  int kept = 0;
  while (kept < 2000) {
    const Rat a_self(std::abs(num(rng)) + 1, den(rng));
    const Rat a_kx(num(rng), den(rng));
    const Rat kx_self(num(rng));
    if ((kx_self + Rat(9) * a_self + Rat(6) * a_kx).is_negative()) continue;
    ++kept;
    const int128 alpha = alpha_bound(a_self, a_kx);
    CHECK(Rat::of(alpha, 1) > m_frak(a_self, a_kx, kx_self) - Rat(1));
  }
}

TEST_CASE("report assembly on fixtures") {
  {
    const ParsedDocument doc = load_fixture("egl_cycle.json");
    const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
    const BoundsReport r = bounds_report(doc.config, doc.params, z.negative);
    CHECK(r.i_index == 1);
    CHECK(r.p_self == Rat(1));
    CHECK(r.p_kx == Rat(1));
    CHECK(r.a_self == Rat(1));
    CHECK(r.a_kx == Rat(1));
    CHECK(r.alpha == 6);
    CHECK(r.m_frak_value == Rat(9, 4));
    CHECK(r.alpha_dominates);
    CHECK(r.vanishing_threshold == 7);
    CHECK(r.birational_threshold == 9);
    CHECK_FALSE(r.n_frak_value.has_value());
    CHECK(r.rr_quadratic == Rat(1, 2));
    CHECK(r.rr_linear == Rat(-1, 2));
    CHECK(r.rr_constant == Rat(1));
  }
  {
    const ParsedDocument doc = load_fixture("quarter_example.json");
    const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
    const BoundsReport r = bounds_report(doc.config, doc.params, z.negative);
    CHECK(r.i_index == 4);
    CHECK(r.p_self == Rat(59, 16));
    CHECK(r.p_kx == Rat(7, 4));
    CHECK(r.a_self == Rat(59));
    CHECK(r.a_kx == Rat(7));
    CHECK(r.n_frak_value.has_value());

    const BoundsReport j = bounds_report(doc.config, doc.params, z.negative, true);
    CHECK(j.jihao_variant);
    CHECK(j.vanishing_threshold == 4 * (j.m_frak_value.floor() + 1));
    CHECK(j.birational_threshold == r.birational_threshold);
  }
  {
    // Missing ambient products refuse loudly.
    const ParsedDocument doc = load_fixture("nef_positive.json");
    const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
    CHECK_THROWS_AS(bounds_report(doc.config, doc.params, z.negative),
                    missing_data_error);
  }
}

TEST_CASE("ambient expansion matches a direct configuration computation") {
  // On a decomposition whose positive part lives entirely in declared
  // products plus configured pairings, P^2 = (K_F + D)^2 - (K_F + D).N.
  const ParsedDocument doc = load_fixture("eps_small_chain.json");
  const ZariskiResult z = build_theorem_decomposition(doc.config, doc.params);
  const AmbientPairings amb = ambient_positive_part(doc.config, doc.params, z.negative);
  CHECK(amb.p_self == Rat(5, 2));
  CHECK(amb.p_kx == Rat(1));
}
