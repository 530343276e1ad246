#pragma once

#include <memory>
#include <optional>
#include <string>

#include "locgame/game.hpp"
#include "locgame/generators.hpp"

namespace locgame {

/// Partition of the points other than u by the set of blocks containing the
/// pair. Cells are maximal sets X_i with {u} union X_i lying in exactly
/// lambda common blocks.
struct FPartition {
  int base = 0;
  std::vector<VertexSet> cells;  // point indices, canonical order
};

FPartition f_partition(const Design& d, int u);

/// f(u) = sum over cells of (|cell| - 1): extra cops needed to pin a robber
/// inside a cell once the blocks through u locate the cell.
int f_value(const Design& d, int u);

/// f(G) = min over points of f(u).
int f_of_design(const Design& d);

/// Delayed-resolving set N(u) u N(u') u N(v) minus {u, u', v} for a lambda=1
/// design, where v is the unique block through u and u'. Returned in
/// incidence-graph vertex ids. Throws NotApplicable when lambda != 1.
VertexSet two_design_set(const Design& d, int u, int u_prime);

/// Scanning strategy over N(u*) plus each f-cell minus one representative,
/// for the f-minimizing point u*; uses f(G) + r + 1 cops. Needs
/// 2 <= lambda <= r-1.
std::unique_ptr<CopStrategy> general_bibd_strategy(const Design& d, const Graph& g);

/// Scanning strategy realizing the lambda=1 two-point bound 2r + k - 3.
std::unique_ptr<CopStrategy> two_design_strategy(const Design& d, const Graph& g);

struct BoundEntry {
  enum class Kind { lower, upper };
  Kind kind = Kind::lower;
  long long value = 0;
  std::string theorem;
  std::string note;
  std::string verdict;  // PROVEN / UNVERIFIED / "" for lower bounds
  int rounds = 0;       // worst-case capture round when PROVEN
  int cops = 0;         // strategy cop count for upper bounds
};

/// Every applicable lower bound: ceil(log2 k); the largest admissible d of
/// the lambda=1, k<r escape argument (reported as d+1); k for symmetric
/// lambda=1; floor((v-2)/8)+1 for triple systems with v > 9.
std::vector<BoundEntry> lower_bounds(const Design& d);

/// k-cop strategy for symmetric lambda=1 designs with k >= 3: scan the block
/// side from N(u), then alternate point/block pinning steps until the
/// candidate cell is a singleton.
std::unique_ptr<CopStrategy> symmetric_strategy(const Design& d);

/// (k+1)-cop variant for lambda=1 designs with r = k+1, k >= 3.
std::unique_ptr<CopStrategy> near_symmetric_strategy(const Design& d);

/// k-cop strategy for affine planes of order k >= 3, pinning with parallel
/// classes.
std::unique_ptr<CopStrategy> affine_strategy(const ResolvedDesign& ap);

/// (v+1)/2-cop strategy for Steiner triple systems: alternate probes on the
/// point halves A and B with a three-round case analysis.
std::unique_ptr<CopStrategy> sts_half_strategy(const Design& d);

/// Exact maximum set of pairwise disjoint blocks (branch-and-bound packing)
/// plus the points left uncovered.
struct Packing {
  std::vector<int> blocks;  // design block indices, sorted
  VertexSet uncovered;      // points in no chosen block
};
Packing max_partial_parallel_class(const Design& d, long long node_budget = 50'000'000);

/// Matching-based strategy for STS(v): cops parked on a maximum partial
/// parallel class T and on the uncovered points Q, one chaser. Requires
/// t + |Q| + 1 >= 9.
std::unique_ptr<CopStrategy> sts_matching_strategy(const Design& d);

/// Generalization to S(t,k,v); the cop count is the exact-packing
/// instantiation max(t + |Q| + 1, largest pattern-class response).
std::unique_ptr<CopStrategy> steiner_matching_strategy(const Design& d, int t, int k);

/// (v-3)-cop strategy for S(3,4,v): probe all points except {0,1,2}, then all
/// except {3,4,5}.
std::unique_ptr<CopStrategy> sqs_strategy(const Design& d);

/// (n+k-4)-cop strategy for TD(k,n) with k >= 4: scan the point side from a
/// group, then two pinning probes through N(u) and N(v).
std::unique_ptr<CopStrategy> td_strategy(const GroupedDesign& td);

/// The symmetric robber's class choice: the lexicographically smallest class
/// with two vertices of the preferred side (flipping the preference for the
/// next round), else of the other side (keeping it). nullopt when no class
/// has two same-side vertices.
std::optional<std::pair<size_t, bool>> symmetric_robber_choice(
    const Graph& g, const std::vector<VertexSet>& cells, bool prefer_block);

/// Robber for symmetric lambda=1 designs facing at most k-1 cops: keeps a
/// class with two same-side vertices alive, alternating sides when possible.
class SymmetricRobber : public RobberAdversary {
 public:
  SymmetricRobber(const Graph& g, int cop_count);
  size_t choose_class(const Graph& g, const std::vector<VertexSet>& cells) override;
  long long violations() const { return violations_; }

 private:
  int preferred_block_next_ = 1;
  long long violations_ = 0;
};

std::unique_ptr<SymmetricRobber> symmetric_robber(const Design& d, const Graph& g, int cop_count);

/// Robber realizing the lambda=1, k<r escape argument for a given d: after a
/// point phase it keeps at least r - d*alpha blocks of N(u) alive, after a
/// block phase at least two points.
class GeneralRobber : public RobberAdversary {
 public:
  GeneralRobber(const Design& d, const Graph& g, int dd);
  size_t choose_class(const Graph& g, const std::vector<VertexSet>& cells) override;
  long long violations() const { return violations_; }

 private:
  int block_target_ = 2;
  bool expect_blocks_ = true;
  Vertex anchor_point_ = 0;
  long long violations_ = 0;
};

std::unique_ptr<GeneralRobber> general_robber(const Design& d, const Graph& g, int dd);

struct BoundReport {
  std::string design_id;
  DesignParams params;
  std::vector<BoundEntry> entries;

  std::optional<long long> best_lower() const;
  std::optional<long long> best_proven_upper() const;
};

struct BoundsOptions {
  int verify_vertex_cap = 150;  // exhaustive verification cutoff
  int round_budget = 0;         // 0: 4|V|
  int threads = 1;
};

/// Runs every applicable bound and strategy on the design, verifying
/// strategies exhaustively at desk scale.
BoundReport bounds_report(const Design& d, const std::string& design_id,
                          const BoundsOptions& opts = {});

}  // namespace locgame
