#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "folzar/index_theorems.hpp"
#include "support/builders.hpp"

using namespace folzar;
using namespace folzar::testing;

TEST_CASE("residue sum verifier") {
  const CurveConfiguration good = make_config({head_curve("G", -2, "p")}, {});
  CHECK(verify_camacho_sad(good, 0) == Rat(0));

  CurveSpec bad = head_curve("B", -2, "p");
  bad.sings[0].cs = Rat(-3, 2);
  const CurveConfiguration mismatched = make_config({bad}, {});
  CHECK(verify_camacho_sad(mismatched, 0) == Rat(-1, 2));

  CurveSpec non_inv;
  non_inv.id = "C";
  non_inv.self_int = 0;
  non_inv.invariant = false;
  non_inv.kf_dot = 0;
  const CurveConfiguration ni = make_config({non_inv}, {});
  CHECK_THROWS_AS(verify_camacho_sad(ni, 0), precondition_error);
}

TEST_CASE("branch index verifier") {
  // Rational chain head: 2 - 0 + (-1) = 1 = one incidence.
  const CurveConfiguration head = make_config({head_curve("G", -2, "p")}, {});
  CHECK(verify_cln(head, 0) == Rat(0));

  // Nodal rational curve: g = 0, K_F.C = 0, a single incidence with h = 2.
  CurveSpec nodal;
  nodal.id = "N";
  nodal.self_int = -1;
  nodal.invariant = true;
  nodal.kf_dot = 0;
  nodal.pa = 1;
  nodal.geom_genus = 0;
  nodal.sings = {sing("node", Rat(-1), 2, false)};
  const CurveConfiguration nc = make_config({nodal}, {});
  CHECK(verify_cln(nc, 0) == Rat(0));

  // Smooth elliptic-like invariant curve without singularities.
  CurveSpec ell;
  ell.id = "E";
  ell.self_int = 0;
  ell.invariant = true;
  ell.kf_dot = 0;
  ell.pa = 1;
  ell.geom_genus = 1;
  const CurveConfiguration ec = make_config({ell}, {});
  CHECK(verify_cln(ec, 0) == Rat(0));
}

TEST_CASE("chain residue values") {
  CHECK(chain_cs_values(hj_sequences({2})) == std::vector<Rat>{Rat(-2)});
  CHECK(chain_cs_values(hj_sequences({2, 3})) ==
        std::vector<Rat>{Rat(-2), Rat(-5, 2)});
  CHECK(chain_cs_values(hj_sequences({2, 2, 2})) ==
        std::vector<Rat>{Rat(-2), Rat(-3, 2), Rat(-4, 3)});
}

TEST_CASE("reciprocal-and-subtract recursion closes on random strings") {
  std::mt19937 rng(611);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long long> entry(2, 7);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<long long> e(static_cast<std::size_t>(len(rng)));
    for (auto& v : e) v = entry(rng);
    const HJData hj = hj_sequences(e);
    const auto cs = chain_cs_values(hj);
    // CS at the forward point of Gamma_1 is the full self-intersection;
    // afterwards the backward contribution is the reciprocal of the
    // previous forward one.
    Rat backward(0);
    for (int k = 0; k < hj.r(); ++k) {
      CHECK(backward + cs[static_cast<std::size_t>(k)] ==
            Rat(-e[static_cast<std::size_t>(k)]));
      backward = cs[static_cast<std::size_t>(k)].reciprocal();
    }
    // The recursion consumed the final reciprocal -mu_r/n.
    CHECK(backward == Rat::of(-hj.mu[static_cast<std::size_t>(hj.r())], hj.n));
  }
}

TEST_CASE("full residue verification on generated chain configurations") {
  std::mt19937 rng(612);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<long long> entry(2, 6);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<long long> e(static_cast<std::size_t>(len(rng)));
    for (auto& v : e) v = entry(rng);
    const CurveConfiguration config = chain_config(e);
    for (int c = 0; c < config.size(); ++c) {
      CHECK(verify_camacho_sad(config, c) == Rat(0));
      CHECK(verify_cln(config, c) == Rat(0));
    }
  }
}

TEST_CASE("chain-completed curve: disjoint case") {
  CurveSpec c;
  c.id = "C";
  c.self_int = -1;
  c.invariant = true;
  c.kf_dot = 1;
  c.sings = {sing("r1", Rat(-1, 3)), sing("r2", Rat(-1, 3)), sing("r3", Rat(-1, 3))};
  const CurveConfiguration config =
      make_config({c, head_curve("G", -2, "p")}, {});
  AdjointParams zero;
  const EcDivisorResult res = ec_divisor(config, 0, zero);
  CHECK(res.divisor.support() == std::vector<int>{0});
  CHECK(res.residual == Rat(0));
}

TEST_CASE("chain-completed curve: attachment at the free singularity") {
  // C meets the tail of (-2,-3) at its free point q; the completed square
  // equals the residue sum away from the attachment.
  CurveSpec c;
  c.id = "C";
  c.self_int = -1;
  c.invariant = true;
  c.kf_dot = 0;
  c.sings = {sing("q", Rat(-2, 5)), sing("qc", Rat(-3, 5))};
  CurveSpec g1 = head_curve("G1", -2, "p1");
  CurveSpec g2;
  g2.id = "G2";
  g2.self_int = -3;
  g2.invariant = true;
  g2.kf_dot = 0;
  g2.sings = {sing("p1", Rat(-1, 2)), sing("q", Rat(-5, 2))};
  const CurveConfiguration config =
      make_config({c, g1, g2}, {{1, 2, 1}, {0, 2, 1}});
  AdjointParams zero;
  const auto chains = maximal_df_chains(config, zero);
  REQUIRE(chains.size() == 1);

  const QDivisor e = e_of_curve(config, 0, chains);
  // E(C,Theta).C = mu_r/n = 2/5 at a tail attachment.
  QDivisor c_only;
  c_only.set(0, Rat(1));
  QDivisor chain_part = e;
  chain_part.add(0, Rat(-1));
  CHECK(intersection(config, chain_part, 0) == Rat(2, 5));
  for (int g : chains[0].chain.curve_indices)
    CHECK(intersection(config, e, g) == Rat(0));

  const EcDivisorResult res = ec_divisor(config, 0, zero);
  CHECK(res.residual == Rat(0));
}

TEST_CASE("chain-completed curve: the quarter example center") {
  const ParsedDocument doc = load_fixture("quarter_example.json");
  const int e3 = doc.config.index_of("E3");
  const EcDivisorResult res = ec_divisor(doc.config, e3, doc.params);
  CHECK(res.divisor.coeff(e3) == Rat(1));
  CHECK(res.divisor.coeff(doc.config.index_of("E2bar")) == Rat(1, 2));
  CHECK(res.divisor.coeff(doc.config.index_of("E1bar")) == Rat(1, 3));
  CHECK(intersection(doc.config, res.divisor, res.divisor) == Rat(-1, 6));
  CHECK(res.residual == Rat(0));
}

TEST_CASE("chain-completed curve: fork center") {
  const ParsedDocument doc = load_fixture("case_f.json");
  const int c = doc.config.index_of("C");
  const EcDivisorResult res = ec_divisor(doc.config, c, doc.params);
  CHECK(res.divisor.coeff(doc.config.index_of("G1")) == Rat(1, 2));
  CHECK(res.divisor.coeff(doc.config.index_of("G2")) == Rat(1, 2));
  // E(C)^2 = C^2 + 1 for two (-2) attachments.
  CHECK(intersection(doc.config, res.divisor, res.divisor) == Rat(-1));
  CHECK(res.residual == Rat(0));
}

TEST_CASE("both residue sums close on every fixture curve") {
  for (const char* name :
       {"single_chain_23.json", "two_chains.json", "dihedral_tail.json",
        "egl_cycle.json", "case_f.json", "quarter_example.json",
        "noncanonical5.json", "negcontrol_2a.json", "nef_positive.json",
        "eps_small_chain.json"}) {
    INFO(name);
    const ParsedDocument doc = load_fixture(name);
    for (int c = 0; c < doc.config.size(); ++c) {
      if (!doc.config.curve(c).invariant) continue;
      CHECK(verify_camacho_sad(doc.config, c) == Rat(0));
      CHECK(verify_cln(doc.config, c) == Rat(0));
    }
  }
}

TEST_CASE("completed divisor pairs to zero on the chains it crosses") {
  for (const char* name : {"quarter_example.json", "case_f.json"}) {
    INFO(name);
    const ParsedDocument doc = load_fixture(name);
    const auto chains = maximal_df_chains(doc.config, doc.params);
    for (int c = 0; c < doc.config.size(); ++c) {
      bool in_chain = false;
      for (const auto& df : chains) in_chain = in_chain || df.chain.contains(c);
      if (in_chain) continue;
      const QDivisor e = e_of_curve(doc.config, c, chains);
      for (const auto& df : chains)
        for (int g : df.chain.curve_indices)
          CHECK(intersection(doc.config, e, g) == Rat(0));
    }
  }
}

TEST_CASE("chain components are rejected") {
  const CurveConfiguration config = chain_config({2, 3});
  AdjointParams zero;
  CHECK_THROWS_AS(ec_divisor(config, 0, zero), precondition_error);
  CHECK_THROWS_AS(ec_divisor(config, 1, zero), precondition_error);
}
