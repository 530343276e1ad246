#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "fixtures.hpp"
#include "locgame/generators.hpp"
#include "locgame/strategies.hpp"

using namespace locgame;
using namespace locgame::testing;

namespace {

Verdict prove(const Design& d, const CopStrategy& cs, int budget = 0) {
  Graph g = Graph::incidence(d);
  if (budget <= 0) budget = default_round_budget(g);
  return verify_strategy_exhaustive(g, cs, budget);
}

struct RandomPlacements final : public CopStrategy {
  int k;
  mutable uint64_t state;
  RandomPlacements(int cops, uint64_t seed) : k(cops), state(seed * 2 + 1) {}
  int cop_count() const override { return k; }
  std::string name() const override { return "random-probes"; }
  Placement next_placement(const Graph& g, const GameTranscript&) const override {
    Placement p;
    while (static_cast<int>(p.size()) < k) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      p.push_back(static_cast<Vertex>((state >> 33) % g.n()));
      sort_unique(p);
    }
    return p;
  }
};

}  // namespace

TEST_CASE("f-partition structure on lambda=1 designs") {
  for (const Design& d : {fano(), sts(13), sts(15), projective_plane(3), projective_plane(4),
                          affine_plane(3).design, affine_plane(4).design}) {
    DesignParams p = validate_bibd(d);
    for (int u = 0; u < d.v; ++u) {
      FPartition part = f_partition(d, u);
      CHECK(static_cast<int>(part.cells.size()) == p.r);
      for (const auto& cell : part.cells) CHECK(static_cast<int>(cell.size()) == p.k - 1);
    }
  }
}

TEST_CASE("f values of the two (7,21,9,3,3) designs") {
  CHECK(f_of_design(triple_system_a()) == 3);
  CHECK(f_of_design(triple_system_b()) == 1);
}

TEST_CASE("fano f(u) = 3 at every point") {
  for (int u = 0; u < 7; ++u) CHECK(f_value(fano(), u) == 3);
}

TEST_CASE("biplane has f = 0: no triple lies in two blocks") {
  Design d = biplane11();
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b)
      for (int c = b + 1; c < d.v; ++c) {
        int cnt = 0;
        for (const auto& blk : d.blocks)
          cnt += set_contains(blk, a) && set_contains(blk, b) && set_contains(blk, c);
        CHECK(cnt <= 1);
      }
  CHECK(f_of_design(d) == 0);
}

TEST_CASE("two-design set sizes") {
  VertexSet s_fano = two_design_set(fano(), 0, 1);
  CHECK(s_fano.size() == 5);  // 3+3+3-4

  VertexSet s13 = two_design_set(sts(13), 0, 1);
  CHECK(s13.size() == 11);  // 6+6+3-4; scanning bound 12 = 2r+k-3

  try {
    two_design_set(biplane11(), 0, 1);
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_applicable);
  }
}

TEST_CASE("general strategy on the (7,21,9,3,3) designs uses f(G)+r+1 cops") {
  for (const Design& d : {triple_system_a(), triple_system_b()}) {
    Graph g = Graph::incidence(d);
    auto cs = general_bibd_strategy(d, g);
    CHECK(cs->cop_count() == f_of_design(d) + 9 + 1);
    Verdict v = verify_strategy_exhaustive(g, *cs, default_round_budget(g));
    CHECK(v.proven());
  }
  Graph g = Graph::incidence(fano());
  CHECK_THROWS_AS(general_bibd_strategy(fano(), g), Error);  // lambda = 1
}

TEST_CASE("lower bound formulas") {
  auto find = [](const std::vector<BoundEntry>& entries, const std::string& thm) {
    for (const auto& e : entries)
      if (e.theorem == thm) return std::optional<long long>(e.value);
    return std::optional<long long>();
  };

  auto fano_lb = lower_bounds(fano());
  CHECK(find(fano_lb, "Thm2.5") == 2);  // ceil(log2 3)
  CHECK(find(fano_lb, "Thm3.1") == 3);
  CHECK(!find(fano_lb, "Thm2.6"));  // k = r
  CHECK(!find(fano_lb, "Cor4.1"));  // v <= 9

  auto pg3_lb = lower_bounds(projective_plane(3));
  CHECK(find(pg3_lb, "Thm3.1") == 4);  // exceeds k-1 = 3

  auto sts13_lb = lower_bounds(sts(13));
  CHECK(find(sts13_lb, "Thm2.6") == 2);  // d = 1
  CHECK(find(sts13_lb, "Cor4.1") == 2);  // floor(11/8) = 1, exceeded

  auto sts25_lb = lower_bounds(sts(25));
  CHECK(find(sts25_lb, "Thm2.6") == 3);  // d = 2: alpha=3, d <= 10/3, d < max{3, 46/16}
  CHECK(find(sts25_lb, "Cor4.1") == 3);  // floor(23/8) = 2, exceeded

  auto ag3_lb = lower_bounds(affine_plane(3).design);
  CHECK(find(ag3_lb, "Thm2.6") == 3);  // d = 2: alpha=1, d <= 2, d < max{3, 14/8}
}

TEST_CASE("symmetric strategy: pg(2,2) with 3 cops, pg(2,3) with 4 cops") {
  auto cs2 = symmetric_strategy(fano());
  CHECK(cs2->cop_count() == 3);
  Verdict v2 = prove(fano(), *cs2, 40);
  CHECK(v2.proven());

  Design pg3 = projective_plane(3);
  auto cs3 = symmetric_strategy(pg3);
  CHECK(cs3->cop_count() == 4);
  Verdict v3 = prove(pg3, *cs3);
  CHECK(v3.proven());

  CHECK_THROWS_AS(symmetric_strategy(affine_plane(3).design), Error);
}

TEST_CASE("near-symmetric strategy: ag(2,3) with 4 cops, ag(2,4) with 5 cops") {
  Design ag3 = affine_plane(3).design;
  auto cs3 = near_symmetric_strategy(ag3);
  CHECK(cs3->cop_count() == 4);
  CHECK(prove(ag3, *cs3).proven());

  Design ag4 = affine_plane(4).design;
  auto cs4 = near_symmetric_strategy(ag4);
  CHECK(cs4->cop_count() == 5);
  CHECK(prove(ag4, *cs4).proven());

  CHECK_THROWS_AS(near_symmetric_strategy(projective_plane(3)), Error);  // r = k
}

TEST_CASE("affine strategy: ag(2,3) with 3 cops, ag(2,4) with 4 cops") {
  ResolvedDesign ag3 = affine_plane(3);
  auto cs3 = affine_strategy(ag3);
  CHECK(cs3->cop_count() == 3);
  Verdict v3 = prove(ag3.design, *cs3, 60);
  CHECK(v3.proven());

  ResolvedDesign ag4 = affine_plane(4);
  auto cs4 = affine_strategy(ag4);
  CHECK(cs4->cop_count() == 4);
  CHECK(prove(ag4.design, *cs4).proven());

  ResolvedDesign not_affine;
  not_affine.design = projective_plane(3);
  CHECK_THROWS_AS(affine_strategy(not_affine), Error);
}

TEST_CASE("triple-system half strategy: sts(9) with 5 cops, sts(13) with 7 cops") {
  Design s9 = sts(9);
  auto cs9 = sts_half_strategy(s9);
  CHECK(cs9->cop_count() == 5);
  CHECK(prove(s9, *cs9).proven());

  Design s13 = sts(13);
  auto cs13 = sts_half_strategy(s13);
  CHECK(cs13->cop_count() == 7);
  CHECK(prove(s13, *cs13).proven());

  CHECK_THROWS_AS(sts_half_strategy(sqs_boolean(3)), Error);
}

TEST_CASE("exact packing searches") {
  Packing p15 = max_partial_parallel_class(sts(15));
  CHECK(p15.blocks.size() == 5);
  CHECK(p15.uncovered.empty());

  Packing p13 = max_partial_parallel_class(sts(13));
  CHECK(p13.blocks.size() == 4);
  CHECK(p13.uncovered.size() == 1);

  // lines of a projective plane pairwise intersect, so no two fano blocks
  // are disjoint
  Packing pf = max_partial_parallel_class(fano());
  CHECK(pf.blocks.size() == 1);
  CHECK(pf.uncovered.size() == 4);

  // chosen blocks pairwise disjoint, missing exactly the uncovered points
  Design d = sts(13);
  std::vector<char> covered(d.v, 0);
  for (int bi : p13.blocks)
    for (int x : d.blocks[bi]) {
      CHECK(!covered[x]);
      covered[x] = 1;
    }
  for (int x : p13.uncovered) CHECK(!covered[x]);
}

TEST_CASE("matching strategy: sts(27) with 10 cops, sts(25) with 10 cops") {
  Design s27 = sts(27);
  auto cs27 = sts_matching_strategy(s27);
  CHECK(cs27->cop_count() == 10);  // 9 + 0 + 1
  CHECK(prove(s27, *cs27).proven());

  Design s25 = sts(25);
  auto cs25 = sts_matching_strategy(s25);
  CHECK(cs25->cop_count() == 10);  // 8 + 1 + 1
  CHECK(prove(s25, *cs25).proven());

  try {
    sts_matching_strategy(sts(13));  // 4 + 1 + 1 = 6 < 9
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_applicable);
  }
}

TEST_CASE("steiner matching generalization") {
  Design ag4 = affine_plane(4).design;  // an S(2,4,16)
  Packing pack = max_partial_parallel_class(ag4);
  CHECK(pack.blocks.size() == 4);
  CHECK(pack.uncovered.empty());
  auto cs = steiner_matching_strategy(ag4, 2, 4);
  CHECK(prove(ag4, *cs).proven());

  Design q8 = sqs_boolean(3);
  Packing pack8 = max_partial_parallel_class(q8);
  CHECK(pack8.blocks.size() == 2);
  CHECK(pack8.uncovered.empty());
  auto cs8 = steiner_matching_strategy(q8, 3, 4);
  CHECK(prove(q8, *cs8).proven());

  CHECK_THROWS_AS(steiner_matching_strategy(biplane11(), 2, 5), Error);
}

TEST_CASE("quadruple-system strategy: sqs(8) with 5 cops, sqs(16) with 13 cops") {
  Design q8 = sqs_boolean(3);
  auto cs8 = sqs_strategy(q8);
  CHECK(cs8->cop_count() == 5);
  Verdict v8 = prove(q8, *cs8);
  CHECK(v8.proven());
  CHECK(v8.max_rounds <= 2);

  Design q16 = sqs_boolean(4);
  auto cs16 = sqs_strategy(q16);
  CHECK(cs16->cop_count() == 13);
  CHECK(prove(q16, *cs16).proven());

  CHECK_THROWS_AS(sqs_strategy(sts(9)), Error);
}

TEST_CASE("transversal strategy: td(4,5) with 5 cops, td(4,3) with 3 cops") {
  GroupedDesign td45 = transversal_design(4, 5);
  auto cs45 = td_strategy(td45);
  CHECK(cs45->cop_count() == 5);
  CHECK(prove(td45.design, *cs45).proven());

  GroupedDesign td43 = derive_td_from_pp(projective_plane(3), 0);
  auto cs43 = td_strategy(td43);
  CHECK(cs43->cop_count() == 3);
  CHECK(prove(td43.design, *cs43).proven());

  try {
    td_strategy(transversal_design(3, 3));
    FAIL("expected NotApplicable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_applicable);
  }
}

TEST_CASE("symmetric robber survives seeded 2-cop play on the heawood graph") {
  Design d = fano();
  Graph g = Graph::incidence(d);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto adv = symmetric_robber(d, g, 2);
    RandomPlacements cops(2, seed);
    PlayResult r = play(g, cops, *adv, 500);
    CHECK(r.outcome == PlayOutcome::survived);
    CHECK(adv->violations() == 0);
  }
  CHECK_THROWS_AS(symmetric_robber(d, g, 3), Error);  // cop_count = k
}

TEST_CASE("symmetric robber survives seeded 3-cop play on pg(2,3)") {
  Design d = projective_plane(3);
  Graph g = Graph::incidence(d);
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    auto adv = symmetric_robber(d, g, 3);
    RandomPlacements cops(3, seed);
    PlayResult r = play(g, cops, *adv, 500);
    CHECK(r.outcome == PlayOutcome::survived);
    CHECK(adv->violations() == 0);
  }
}

TEST_CASE("symmetric robber invariant: exhaustive to depth 6 on heawood, 2 cops") {
  Graph g = Graph::incidence(fano());

  std::vector<Placement> placements;
  for (int a = 0; a < g.n(); ++a) {
    placements.push_back({a});
    for (int b = a + 1; b < g.n(); ++b) placements.push_back({a, b});
  }

  // breadth-first over (territory, preference) states reachable within 6
  // rounds: every placement must leave the adversary a class with two
  // same-side vertices
  std::set<std::pair<VertexSet, bool>> seen;
  std::vector<std::pair<VertexSet, bool>> frontier{{g.all_vertices(), true}};
  seen.insert(frontier.front());
  long long checked = 0;
  for (int depth = 0; depth < 6; ++depth) {
    std::vector<std::pair<VertexSet, bool>> next;
    for (const auto& [territory, prefer_block] : frontier) {
      for (const auto& p : placements) {
        auto cells = partition_by_probe(g, territory, p);
        std::vector<VertexSet> open;
        for (auto& c : cells)
          if (c.size() >= 2) open.push_back(std::move(c));
        REQUIRE(!open.empty());  // two cops never corner the robber
        auto choice = symmetric_robber_choice(g, open, prefer_block);
        REQUIRE(choice.has_value());  // the invariant always has a witness
        ++checked;
        std::pair<VertexSet, bool> node{expand(g, open[choice->first]), choice->second};
        if (seen.insert(node).second) next.push_back(std::move(node));
      }
    }
    frontier = std::move(next);
  }
  CHECK(checked > 0);
}

TEST_CASE("general robber keeps its cells alive on sts(25) and sts(13)") {
  Design s25 = sts(25);
  Graph g25 = Graph::incidence(s25);
  {
    auto adv = general_robber(s25, g25, 2);
    RandomPlacements cops(2, 777);
    PlayResult r = play(g25, cops, *adv, 5000);  // 10^4 random probes in one run
    CHECK(r.outcome == PlayOutcome::survived);
    CHECK(adv->violations() == 0);
  }

  Design s13 = sts(13);
  Graph g13 = Graph::incidence(s13);
  {
    auto adv = general_robber(s13, g13, 1);
    RandomPlacements cops(1, 31337);
    PlayResult r = play(g13, cops, *adv, 500);
    CHECK(r.outcome == PlayOutcome::survived);
    CHECK(adv->violations() == 0);
  }

  Design pg3 = projective_plane(3);
  CHECK_THROWS_AS(general_robber(pg3, Graph::incidence(pg3), 1), Error);  // k = r
}

TEST_CASE("bounds report rows and consistency") {
  BoundReport fano_report = bounds_report(fano(), "pg(2,2)");
  CHECK(fano_report.best_lower() == 3);
  CHECK(fano_report.best_proven_upper() == 3);

  BoundReport ag3_report = bounds_report(affine_plane(3).design, "ag(2,3)");
  CHECK(ag3_report.best_lower() == 3);
  CHECK(ag3_report.best_proven_upper() == 3);

  BoundReport s13_report = bounds_report(sts(13), "sts(13)");
  CHECK(s13_report.best_lower() == 2);
  bool upper7 = false, upper12 = false;
  for (const auto& e : s13_report.entries) {
    if (e.kind == BoundEntry::Kind::upper && e.theorem == "Thm4.2") upper7 = e.value == 7;
    if (e.kind == BoundEntry::Kind::upper && e.theorem == "Cor2.5") upper12 = e.value == 12;
    if (e.kind == BoundEntry::Kind::upper) CHECK(e.verdict == "PROVEN");
  }
  CHECK(upper7);
  CHECK(upper12);

  for (const BoundReport& rep : {fano_report, ag3_report, s13_report}) {
    auto lo = rep.best_lower();
    auto hi = rep.best_proven_upper();
    REQUIRE(lo.has_value());
    REQUIRE(hi.has_value());
    CHECK(*lo <= *hi);
  }
}
