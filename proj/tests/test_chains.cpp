#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "folzar/chains.hpp"
#include "support/builders.hpp"

using namespace folzar;
using namespace folzar::testing;

namespace {

std::vector<std::string> chain_ids(const CurveConfiguration& config, const Chain& c) {
  std::vector<std::string> out;
  for (int i : c.curve_indices) out.push_back(config.curve(i).id);
  return out;
}

// Longest leading sub-chain satisfying the criterion at pairing data d,
// recomputed from scratch.
int df_prefix_length(const HJData& hj, const Vec& d) {
  Rat s(0);
  int t = 0;
  while (t < hj.r()) {
    const Rat next = s + Rat::of(hj.mu[static_cast<std::size_t>(t) + 1], 1) * d(t);
    if (!(next < Rat(1))) break;
    s = next;
    ++t;
  }
  return t;
}

}  // namespace

TEST_CASE("two disjoint heads give two unit chains") {
  const CurveConfiguration config =
      make_config({head_curve("A", -2, "pa"), head_curve("B", -2, "pb")}, {});
  const auto chains = find_f_chains(config);
  REQUIRE(chains.size() == 2);
  CHECK(chains[0].length() == 1);
  CHECK(chains[1].length() == 1);
  CHECK(chain_ids(config, chains[0]) == std::vector<std::string>{"A"});
  CHECK(chain_ids(config, chains[1]) == std::vector<std::string>{"B"});
}

TEST_CASE("the quarter-example fixture has chains E1bar and E2bar only") {
  const ParsedDocument doc = load_fixture("quarter_example.json");
  const auto chains = find_f_chains(doc.config);
  REQUIRE(chains.size() == 2);
  CHECK(chain_ids(doc.config, chains[0]) == std::vector<std::string>{"E1bar"});
  CHECK(chain_ids(doc.config, chains[1]) == std::vector<std::string>{"E2bar"});
}

TEST_CASE("a (-2,-3) string is one chain of length two") {
  const CurveConfiguration config = chain_config({2, 3});
  const auto chains = find_f_chains(config);
  REQUIRE(chains.size() == 1);
  CHECK(chain_ids(config, chains[0]) == std::vector<std::string>{"g1", "g2"});
  CHECK(chains[0].hj.n == 5);
}

TEST_CASE("random strings are recognized whole") {
  std::mt19937 rng(513);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long long> entry(2, 7);
  for (int iter = 0; iter < 200; ++iter) {
    std::vector<long long> e(static_cast<std::size_t>(len(rng)));
    for (auto& v : e) v = entry(rng);
    const CurveConfiguration config = chain_config(e);
    const auto chains = find_f_chains(config);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].length() == static_cast<int>(e.size()));
    CHECK(chains[0].hj.e == e);
  }
}

TEST_CASE("overlapping or touching maximal chains are rejected") {
  // Two heads sharing a middle: A(-1 end) - B - C(-1 end).
  CurveSpec a = head_curve("A", -2, "pab");
  CurveSpec c = head_curve("C", -2, "pbc");
  CurveSpec b;
  b.id = "B";
  b.self_int = -2;
  b.invariant = true;
  b.kf_dot = 0;
  b.sings = {sing("pab", Rat(-1, 2)), sing("pbc", Rat(-3, 2))};
  const CurveConfiguration shared =
      make_config({a, b, c}, {{0, 1, 1}, {1, 2, 1}});
  CHECK_THROWS_AS(find_f_chains(shared), inconsistent_configuration_error);

  // Two heads meeting each other directly.
  CurveSpec x = head_curve("X", -2, "pxy");
  CurveSpec y = head_curve("Y", -2, "pxy");
  const CurveConfiguration touching = make_config({x, y}, {{0, 1, 1}});
  CHECK_THROWS_AS(find_f_chains(touching), inconsistent_configuration_error);
}

TEST_CASE("a chain link needs a shared singular point") {
  CurveSpec g1 = head_curve("G1", -2, "p1");
  CurveSpec g2;
  g2.id = "G2";
  g2.self_int = -2;
  g2.invariant = true;
  g2.kf_dot = 0;
  g2.sings = {sing("other", Rat(-1, 2)), sing("q", Rat(-3, 2))};
  const CurveConfiguration config = make_config({g1, g2}, {{0, 1, 1}});
  CHECK_THROWS_AS(find_f_chains(config), inconsistent_configuration_error);
}

TEST_CASE("criterion certificates") {
  const CurveConfiguration config = chain_config({2, 3});
  const Chain chain = find_f_chains(config).front();

  AdjointParams zero;
  DFCertificate cert = is_df_chain(config, chain, zero);
  CHECK(cert.is_df);
  CHECK(cert.mu_weighted_sum == Rat(0));

  // eps = 1/n: mu-weighted sum of eps (e_k - 2) stays below 1.
  AdjointParams fifth;
  fifth.epsilon = Rat(1, 5);
  cert = is_df_chain(config, chain, fifth);
  CHECK(cert.is_df);
  CHECK(cert.mu_weighted_sum == Rat(2, 5));  // mu_2 * (1/5) * (3 - 2)
}

TEST_CASE("all-(-2) strings accept any eps") {
  const CurveConfiguration config = chain_config({2, 2, 2, 2});
  const Chain chain = find_f_chains(config).front();
  for (int k = 0; k <= 4; ++k) {
    AdjointParams p;
    p.epsilon = Rat(k, 4);
    const DFCertificate cert = is_df_chain(config, chain, p);
    CHECK(cert.is_df);
    CHECK(cert.mu_weighted_sum == Rat(0));
  }
}

TEST_CASE("maximal df chains and their divisors") {
  {
    const CurveConfiguration config = chain_config({2, 3});
    AdjointParams zero;
    const auto dfs = maximal_df_chains(config, zero);
    REQUIRE(dfs.size() == 1);
    CHECK(dfs[0].chain.length() == 2);
    CHECK(dfs[0].m_coeffs(0) == Rat(3, 5));
    CHECK(dfs[0].m_coeffs(1) == Rat(1, 5));
  }
  {
    const ParsedDocument doc = load_fixture("quarter_example.json");
    const auto dfs = maximal_df_chains(doc.config, doc.params);
    REQUIRE(dfs.size() == 2);
    CHECK(doc.config.curve(dfs[0].chain.curve_indices[0]).id == "E1bar");
    CHECK(dfs[0].m_coeffs(0) == Rat(1, 4));
    CHECK(doc.config.curve(dfs[1].chain.curve_indices[0]).id == "E2bar");
    CHECK(dfs[1].m_coeffs(0) == Rat(1, 2));
  }
  {
    // Boundary of the strict inequality: D.Gamma_1 = 1 excludes the chain.
    CurveSpec t;
    t.id = "T";
    t.self_int = 0;
    t.invariant = false;
    t.kf_dot = 0;
    t.delta = Rat(1);
    CurveSpec g1 = head_curve("G1", -2, "p1");
    CurveSpec g2;
    g2.id = "G2";
    g2.self_int = -2;
    g2.invariant = true;
    g2.kf_dot = 0;
    g2.sings = {sing("p1", Rat(-1, 2)), sing("q", Rat(-3, 2))};
    const CurveConfiguration config =
        make_config({t, g1, g2}, {{0, 1, 1}, {1, 2, 1}});
    AdjointParams params;
    params.delta[0] = Rat(1);
    REQUIRE(find_f_chains(config).size() == 1);
    CHECK(maximal_df_chains(config, params).empty());
  }
}

TEST_CASE("df chains truncate at the pairing wall") {
  // Boundary divisor meeting the second curve of a (-2,-2) string with
  // coefficient 1: mu_2 D.Gamma_2 = 2 stops the chain after one curve.
  CurveSpec t;
  t.id = "T";
  t.self_int = 0;
  t.invariant = false;
  t.kf_dot = 0;
  t.delta = Rat(1);
  CurveSpec g1 = head_curve("G1", -2, "p1");
  CurveSpec g2;
  g2.id = "G2";
  g2.self_int = -2;
  g2.invariant = true;
  g2.kf_dot = 0;
  g2.sings = {sing("p1", Rat(-1, 2)), sing("q", Rat(-3, 2))};
  const CurveConfiguration config = make_config({t, g1, g2}, {{0, 2, 1}, {1, 2, 1}});
  AdjointParams params;
  params.delta[0] = Rat(1);
  const auto dfs = maximal_df_chains(config, params);
  REQUIRE(dfs.size() == 1);
  CHECK(dfs[0].chain.length() == 1);
  CHECK(config.curve(dfs[0].chain.curve_indices[0]).id == "G1");
}

TEST_CASE("theta against a chain") {
  AdjointParams zero;
  {
    // Disjoint curve.
    CurveSpec c;
    c.id = "C";
    c.self_int = 0;
    c.invariant = false;
    c.kf_dot = 0;
    auto specs = std::vector<CurveSpec>{c, head_curve("G1", -2, "p1")};
    const CurveConfiguration config = make_config(specs, {});
    const auto dfs = maximal_df_chains(config, zero);
    REQUIRE(dfs.size() == 1);
    CHECK(theta_chain(config, 0, dfs[0], zero) == Rat(0));
  }
  {
    // C meets Gamma_2 of a (-2,-2) string once, D = 0: theta = 1/mu_2 = 1/2.
    CurveSpec c;
    c.id = "C";
    c.self_int = 0;
    c.invariant = false;
    c.kf_dot = 2;
    CurveSpec g1 = head_curve("G1", -2, "p1");
    CurveSpec g2;
    g2.id = "G2";
    g2.self_int = -2;
    g2.invariant = true;
    g2.kf_dot = 0;
    g2.sings = {sing("p1", Rat(-1, 2)), sing("q", Rat(-3, 2))};
    const CurveConfiguration config =
        make_config({c, g1, g2}, {{1, 2, 1}, {0, 2, 1}});
    const auto dfs = maximal_df_chains(config, zero);
    REQUIRE(dfs.size() == 1);
    CHECK(theta_chain(config, 0, dfs[0], zero) == Rat(1, 2));
    CHECK(theta_index(config, 0, zero) == Rat(1, 2));
    CHECK_THROWS_AS(theta_chain(config, 1, dfs[0], zero), precondition_error);
  }
  {
    // The quarter example: E3 meets the (-3) chain with D.Gamma = 1/4.
    const ParsedDocument doc = load_fixture("quarter_example.json");
    const auto dfs = maximal_df_chains(doc.config, doc.params);
    const int e3 = doc.config.index_of("E3");
    CHECK(theta_chain(doc.config, e3, dfs[0], doc.params) == Rat(3, 4));
    // First contact at the head with D.Gamma_1 = 0 sits on the boundary:
    // the computed value is exactly 1 and is returned unclamped.
    CHECK(theta_chain(doc.config, e3, dfs[1], doc.params) == Rat(1));
    CHECK(theta_index(doc.config, e3, doc.params) == Rat(1));
  }
}

TEST_CASE("theta of a boundary component is capped by its residual weight") {
  // C carries coefficient 1/3 and meets the chain head once: theta <= 2/3.
  CurveSpec c;
  c.id = "C";
  c.self_int = 0;
  c.invariant = false;
  c.kf_dot = 1;
  c.delta = Rat(1, 3);
  CurveSpec g = head_curve("G", -3, "p");
  const CurveConfiguration config = make_config({c, g}, {{0, 1, 1}});
  AdjointParams params;
  params.delta[0] = Rat(1, 3);
  const auto dfs = maximal_df_chains(config, params);
  REQUIRE(dfs.size() == 1);
  const Rat theta = theta_index(config, 0, params, dfs);
  CHECK(theta == Rat(2, 3));
  CHECK(theta <= Rat(1) - Rat(1, 3));
}

TEST_CASE("theta is the minimal avoiding value") {
  // Independent route: evaluate the avoidance predicate directly on both
  // sides of the computed value.
  std::mt19937 rng(514);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<long long> entry(2, 6);
  std::uniform_int_distribution<long long> num(0, 2);
  std::uniform_int_distribution<long long> den(3, 9);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<long long> e(static_cast<std::size_t>(len(rng)));
    for (auto& v : e) v = entry(rng);
    const int r = static_cast<int>(e.size());
    const HJData hj = hj_sequences(e);
    Vec d(r);
    Rat s(0);
    for (int k = 0; k < r; ++k) {
      d(k) = Rat(num(rng), den(rng));
      s += Rat::of(hj.mu[static_cast<std::size_t>(k) + 1], 1) * d(k);
    }
    if (!(s < Rat(1)))
      for (int k = 0; k < r; ++k) d(k) = d(k) / (s + Rat(1));

    // Contact pattern: one contact position, multiplicity 1 or 2.
    std::uniform_int_distribution<int> pos(0, r - 1);
    const int contact = pos(rng);
    const long long mult = 1 + (iter % 2);
    Vec c = Vec::Constant(r, Rat(0));
    c(contact) = Rat(mult);

    // theta by the closed form.
    Rat partial(0);
    for (int k = 0; k <= contact; ++k)
      partial += Rat::of(hj.mu[static_cast<std::size_t>(k) + 1], 1) * d(k);
    const Rat theta = (Rat(1) - partial) /
                      (Rat::of(hj.mu[static_cast<std::size_t>(contact) + 1], 1) * Rat(mult));

    auto avoided = [&](const Rat& x) {
      Vec shifted(r);
      for (int k = 0; k < r; ++k) shifted(k) = d(k) + x * c(k);
      const int t = df_prefix_length(hj, shifted);
      return t <= contact;
    };
    CHECK(avoided(theta));
    if (theta > Rat(0)) CHECK_FALSE(avoided(theta * Rat(999, 1000)));
  }
}

TEST_CASE("sub-chain ladder is strictly increasing") {
  AdjointParams zero;
  {
    const CurveConfiguration config = chain_config({2, 3});
    const auto dfs = maximal_df_chains(config, zero);
    const auto ladder = subchain_ladder(config, dfs[0], zero);
    REQUIRE(ladder.size() == 2);
    CHECK(ladder[0].coeff(0) == Rat(1, 2));
    CHECK(ladder[1].coeff(0) == Rat(3, 5));
    CHECK(ladder[1].coeff(1) == Rat(1, 5));
  }
  {
    const CurveConfiguration config = chain_config({2});
    const auto ladder =
        subchain_ladder(config, maximal_df_chains(config, zero)[0], zero);
    CHECK(ladder.size() == 1);
  }
  {
    const CurveConfiguration config = chain_config({2, 2, 2});
    const auto ladder =
        subchain_ladder(config, maximal_df_chains(config, zero)[0], zero);
    REQUIRE(ladder.size() == 3);
    CHECK(ladder[0].coeff(0) == Rat(1, 2));
    CHECK(ladder[1].coeff(0) == Rat(2, 3));
    CHECK(ladder[1].coeff(1) == Rat(1, 3));
    CHECK(ladder[2].coeff(0) == Rat(3, 4));
    CHECK(ladder[2].coeff(1) == Rat(2, 4));
    CHECK(ladder[2].coeff(2) == Rat(1, 4));
    for (std::size_t t = 1; t < ladder.size(); ++t)
      for (const auto& [i, v] : ladder[t - 1].entries())
        CHECK(v < ladder[t].coeff(i));
  }
}

TEST_CASE("df pairings stay below the reciprocal weights") {
  // D.Gamma_k < 1/mu_k on every (D,F)-chain.
  std::mt19937 rng(515);
  std::uniform_int_distribution<int> len(1, 8);
  std::uniform_int_distribution<long long> entry(2, 7);
  std::uniform_int_distribution<long long> num(0, 3);
  std::uniform_int_distribution<long long> den(2, 9);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<long long> e(static_cast<std::size_t>(len(rng)));
    for (auto& v : e) v = entry(rng);
    const HJData hj = hj_sequences(e);
    const int r = hj.r();
    Vec d(r);
    Rat s(0);
    for (int k = 0; k < r; ++k) {
      d(k) = Rat(num(rng), den(rng));
      s += Rat::of(hj.mu[static_cast<std::size_t>(k) + 1], 1) * d(k);
    }
    if (!(s < Rat(1)))
      for (int k = 0; k < r; ++k) d(k) = d(k) / (s + Rat(1));
    for (int k = 0; k < r; ++k) {
      CHECK(d(k) < Rat(1) / Rat::of(hj.mu[static_cast<std::size_t>(k) + 1], 1));
      CHECK(Rat(1) / Rat::of(hj.mu[static_cast<std::size_t>(k) + 1], 1) <=
            Rat(1) / Rat(k + 1));
    }
  }
}
