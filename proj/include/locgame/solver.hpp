#pragma once

#include <optional>
#include <string>

#include "locgame/game.hpp"

namespace locgame {

struct Budgets {
  long long max_states = 2'000'000;
  int max_rounds = 0;  // 0: 3 * |V|
};

enum class SolveStatus { cops_win, robber_wins, unknown };

/// Machine-checkable win certificate. For cops: one placement per candidate
/// set reachable under certificate play. For robbers: the robber-win region;
/// every placement on a region state leaves a class whose expansion stays in
/// the region.
struct Certificate {
  enum class Kind { cops, robber };
  Kind kind = Kind::cops;
  int k = 0;
  int round_bound = 0;
  std::string graph_id;
  std::vector<std::pair<VertexSet, Placement>> cop_moves;  // sorted by state
  std::vector<VertexSet> robber_states;                    // sorted
};

struct SolveResult {
  std::string graph_id;
  int k = 0;
  SolveStatus status = SolveStatus::unknown;
  int round_bound = 0;    // capture bound for cops_win
  long long states = 0;   // candidate sets explored
  std::string note;
  std::optional<Certificate> certificate;
};

/// Decides whether k cops capture the robber on g. State space: candidate
/// sets reachable from V(G); placements: all nonempty subsets of at most k
/// vertices, deduplicated by the partition they induce. Capture bounds come
/// from value iteration to a fixpoint, so ROBBER_WINS is exact whenever the
/// reachable region fits the budget.
SolveResult can_win(const Graph& g, int k, const Budgets& budgets = {}, int threads = 1,
                    const std::string& graph_id = "graph");

struct LocalizationResult {
  int lo = 1;              // largest k proven insufficient, plus one
  std::optional<int> hi;   // smallest k proven sufficient
  bool exact = false;      // hi == lo with no unknown below
  std::vector<SolveResult> runs;

  std::string str() const;
};

/// Ascending search for the least k with a cop win; an interval results when
/// a budget truncates the search.
LocalizationResult localization_number(const Graph& g, int k_max, const Budgets& budgets = {},
                                       int threads = 1, const std::string& graph_id = "graph");

/// The certificate of a decided run; throws on UNKNOWN.
Certificate extract_certificate(const SolveResult& r);

/// Cop strategy that follows a cops-win certificate.
class CertificateCopStrategy : public CopStrategy {
 public:
  explicit CertificateCopStrategy(const Certificate& cert);
  int cop_count() const override { return k_; }
  std::string name() const override { return "certificate"; }
  Placement next_placement(const Graph& g, const GameTranscript& t) const override;

 private:
  int k_;
  std::vector<std::pair<VertexSet, Placement>> moves_;  // sorted by state
};

/// Adversary that stays inside a robber-win region.
class CertificateRobber : public RobberAdversary {
 public:
  explicit CertificateRobber(const Certificate& cert);
  size_t choose_class(const Graph& g, const std::vector<VertexSet>& cells) override;
  long long violations() const { return violations_; }

 private:
  std::vector<VertexSet> states_;  // sorted
  long long violations_ = 0;
};

/// Replays a cops certificate through the exhaustive verifier.
Verdict replay_cops_certificate(const Graph& g, const Certificate& cert, int round_budget = 0,
                                int threads = 1);

/// Checks the robber-region closure: V(G) lies in the region and every
/// placement of at most k probes on a region state leaves a surviving class.
bool replay_robber_certificate(const Graph& g, const Certificate& cert);

}  // namespace locgame
