#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "locgame/generators.hpp"
#include "locgame/io.hpp"
#include "locgame/solver.hpp"
#include "locgame/strategies.hpp"
#include "oracle.hpp"

using namespace locgame;
using namespace locgame::testing;

namespace {

Graph heawood() { return Graph::incidence(fano()); }

// the solver's verdict must agree with the brute-force enumerator
void check_against_oracle(const Graph& g, const char* label, int k_max = 5) {
  BruteForceOracle oracle(g);
  int expected = oracle.localization_number(k_max);
  REQUIRE(expected > 0);
  LocalizationResult got = localization_number(g, k_max);
  INFO(label);
  CHECK(got.exact);
  REQUIRE(got.hi.has_value());
  CHECK(*got.hi == expected);
}

}  // namespace

TEST_CASE("two-vertex clique: one cop captures in one round") {
  SolveResult r = can_win(complete_graph(2), 1);
  CHECK(r.status == SolveStatus::cops_win);
  CHECK(r.round_bound == 1);
  Certificate cert = extract_certificate(r);
  CHECK(cert.cop_moves.size() == 1);
}

TEST_CASE("heawood: cops win with 3, robber wins with 2") {
  Graph g = heawood();
  SolveResult r3 = can_win(g, 3, {}, 1, "heawood");
  CHECK(r3.status == SolveStatus::cops_win);

  SolveResult r2 = can_win(g, 2, {}, 1, "heawood");
  CHECK(r2.status == SolveStatus::robber_wins);

  LocalizationResult lr = localization_number(g, 4, {}, 1, "heawood");
  CHECK(lr.exact);
  CHECK(lr.hi == 3);
}

TEST_CASE("cop monotonicity: winning with k implies winning with k+1") {
  Graph g = heawood();
  CHECK(can_win(g, 3).status == SolveStatus::cops_win);
  CHECK(can_win(g, 4).status == SolveStatus::cops_win);

  Graph c6 = cycle_graph(6);
  for (int k = 1; k <= 4; ++k) {
    SolveResult r = can_win(c6, k);
    SolveResult r2 = can_win(c6, k + 1);
    if (r.status == SolveStatus::cops_win) CHECK(r2.status == SolveStatus::cops_win);
  }
}

TEST_CASE("solver equals the brute-force enumerator on the small corpus") {
  check_against_oracle(path_graph(2), "P2");
  check_against_oracle(path_graph(5), "P5");
  check_against_oracle(path_graph(10), "P10");
  check_against_oracle(cycle_graph(3), "C3");
  check_against_oracle(cycle_graph(4), "C4");
  check_against_oracle(cycle_graph(6), "C6");
  check_against_oracle(cycle_graph(10), "C10");
  check_against_oracle(star_graph(3), "K1,3");
  check_against_oracle(star_graph(5), "K1,5");
  check_against_oracle(complete_graph(4), "K4");
  check_against_oracle(complete_bipartite(3, 3), "K3,3");
  check_against_oracle(cube_graph(), "Q3");
  check_against_oracle(petersen_graph(), "Petersen");
}

TEST_CASE("six-cycle value is 2") {
  // frozen from the brute-force enumerator run
  BruteForceOracle oracle(cycle_graph(6));
  CHECK(!oracle.cops_win(1));
  CHECK(oracle.cops_win(2));
  LocalizationResult lr = localization_number(cycle_graph(6), 3);
  CHECK(lr.hi == 2);
}

TEST_CASE("information monotonicity: capture bounds never grow on subsets") {
  // cop-win within R from a superset implies cop-win within R from every
  // subset; exhaustive over the full power set of two small graphs
  for (auto [g, k] : std::vector<std::pair<Graph, int>>{{cycle_graph(6), 1},
                                                        {cycle_graph(6), 2},
                                                        {cube_graph(), 2}}) {
    BruteForceOracle oracle(g);
    std::vector<int> bound = oracle.capture_bound_table(k);
    const uint32_t total = 1u << g.n();
    for (uint32_t sup = 1; sup < total; ++sup) {
      if (bound[sup] < 0) continue;
      // drop one member at a time; deeper subsets follow by induction
      for (int v = 0; v < g.n(); ++v) {
        if (!(sup & (1u << v))) continue;
        uint32_t sub = sup & ~(1u << v);
        if (sub == 0) continue;
        REQUIRE(bound[sub] >= 0);
        CHECK(bound[sub] <= bound[sup]);
      }
    }
  }
}

TEST_CASE("cops certificate replays to proven") {
  Graph g = heawood();
  SolveResult r3 = can_win(g, 3, {}, 1, "heawood");
  Certificate cert = extract_certificate(r3);
  CHECK(cert.kind == Certificate::Kind::cops);
  Verdict v = replay_cops_certificate(g, cert);
  CHECK(v.proven());
  CHECK(v.max_rounds <= cert.round_bound);
}

TEST_CASE("robber certificate closure and survival") {
  Graph g = heawood();
  SolveResult r2 = can_win(g, 2, {}, 1, "heawood");
  Certificate cert = extract_certificate(r2);
  CHECK(cert.kind == Certificate::Kind::robber);
  CHECK(replay_robber_certificate(g, cert));

  // the certificate adversary survives 2-cop truncations of the symmetric
  // strategy for 500 rounds
  struct Truncated final : public CopStrategy {
    const CopStrategy& inner;
    explicit Truncated(const CopStrategy& cs) : inner(cs) {}
    int cop_count() const override { return 2; }
    std::string name() const override { return "truncated"; }
    Placement next_placement(const Graph& gg, const GameTranscript& t) const override {
      Placement p = inner.next_placement(gg, t);
      if (p.size() > 2) p.resize(2);
      return p;
    }
  };
  auto full = symmetric_strategy(fano());
  Truncated trunc(*full);
  CertificateRobber adv(cert);
  PlayResult play_result = play(g, trunc, adv, 500);
  CHECK(play_result.outcome == PlayOutcome::survived);
  CHECK(adv.violations() == 0);
}

TEST_CASE("ag(2,3): solver lower bound meets the proven 3-cop strategy") {
  Graph g = Graph::incidence(affine_plane(3).design);
  SolveResult r2 = can_win(g, 2, {}, 1, "ag23");
  CHECK(r2.status == SolveStatus::robber_wins);

  auto cs = affine_strategy(affine_plane(3));
  Verdict v = verify_strategy_exhaustive(g, *cs, 60);
  CHECK(v.proven());
}

TEST_CASE("ag(2,3): the solver settles the value 3 outright") {
  // the k vs k+1 question for the (9,12,4,3,1) design closes at k
  Graph g = Graph::incidence(affine_plane(3).design);
  SolveResult r3 = can_win(g, 3, {}, 4, "ag23");
  CHECK(r3.status == SolveStatus::cops_win);
  CHECK(r3.round_bound == 3);
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
  Budgets tiny;
  tiny.max_states = 10;
  SolveResult r = can_win(heawood(), 2, tiny);
  CHECK(r.status == SolveStatus::unknown);
  CHECK(!r.note.empty());
  CHECK_THROWS_AS(extract_certificate(r), Error);
}

TEST_CASE("solver output is byte-identical across thread counts") {
  Graph g = heawood();
  for (int k : {2, 3}) {
    SolveResult r1 = can_win(g, k, {}, 1, "heawood");
    SolveResult r4 = can_win(g, k, {}, 4, "heawood");
    CHECK(render_solve_text(r1) == render_solve_text(r4));
    if (r1.certificate) {
      std::ostringstream c1, c4;
      write_certificate(c1, *r1.certificate);
      write_certificate(c4, *r4.certificate);
      CHECK(c1.str() == c4.str());
    }
  }
}
