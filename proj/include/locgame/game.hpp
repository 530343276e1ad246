#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "locgame/graph.hpp"

namespace locgame {

/// Probe set for one cop turn. Sorted, duplicate-free, size <= cop count.
/// Duplicate probes would add identical coordinates, so they are forbidden.
/// Cops teleport and are interchangeable, so per-cop identity carries no
/// information and only the probe set is modeled.
using Placement = VertexSet;

/// Distances from each probe (in placement order) to one candidate.
using DistanceVector = std::vector<int>;

/// One cell of a probe-induced partition together with its distance vector.
struct ProbeCell {
  DistanceVector vec;
  VertexSet members;
};

struct Round {
  Placement placement;
  DistanceVector observed;  // vector of the class the robber ended in
  VertexSet cell;           // that class
};

struct GameTranscript {
  VertexSet initial;
  std::vector<Round> rounds;
};

/// Deterministic cop controller: the placement may depend only on the
/// transcript, so identical transcripts give identical placements.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual int cop_count() const = 0;
  virtual std::string name() const = 0;
  virtual Placement next_placement(const Graph& g, const GameTranscript& t) const = 0;
};

/// Robber controller in candidate-set semantics: picks one of the offered
/// non-singleton classes. May hold seeded random state.
class RobberAdversary {
 public:
  virtual ~RobberAdversary() = default;
  virtual size_t choose_class(const Graph& g, const std::vector<VertexSet>& cells) = 0;
};

/// Closed neighborhood N[s].
VertexSet expand(const Graph& g, const VertexSet& s);

/// Partition of s into identical-distance-vector classes, ordered by
/// lexicographically smallest distance vector. An empty placement yields the
/// single cell s.
std::vector<ProbeCell> partition_with_vectors(const Graph& g, const VertexSet& s,
                                              const Placement& p);
std::vector<VertexSet> partition_by_probe(const Graph& g, const VertexSet& s,
                                          const Placement& p);

enum class StepOutcome { captured, ongoing };

struct StepResult {
  StepOutcome outcome = StepOutcome::captured;
  VertexSet next;          // expanded territory handed to the next probe
  DistanceVector observed;
  VertexSet cell;          // the class the adversary picked
};

/// One round: partition s by p; capture iff every class is a singleton,
/// otherwise the adversary picks a non-singleton class B and the game moves
/// to N[B].
StepResult step(const Graph& g, const VertexSet& s, const Placement& p, RobberAdversary& adv);

enum class PlayOutcome { captured, survived };

struct PlayResult {
  PlayOutcome outcome = PlayOutcome::survived;
  int rounds = 0;  // capture round, or the exhausted budget
  GameTranscript transcript;
};

/// Runs the game from T0 = V(G) for at most round_budget rounds.
PlayResult play(const Graph& g, const CopStrategy& cs, RobberAdversary& adv, int round_budget);

struct Verdict {
  enum class Kind { proven, counterexample, budget_exhausted };
  Kind kind = Kind::budget_exhausted;
  int max_rounds = 0;            // proven: worst-case capture round
  GameTranscript counterexample; // counterexample / exhausted branch

  bool proven() const { return kind == Kind::proven; }
};

/// Depth-first search over every adversary class choice. PROVEN iff every
/// branch is captured within the budget. A branch that revisits a
/// (territory, placement) pair is reported as a counterexample: the strategy
/// is re-entering a configuration it already failed to shrink. `threads`
/// splits the top-level branches; the verdict does not depend on scheduling.
Verdict verify_strategy_exhaustive(const Graph& g, const CopStrategy& cs, int round_budget,
                                   int threads = 1);

/// Distance-vector classes of all of V(G) with respect to s; true iff the
/// union of the classes of size >= 2 is an independent set.
bool is_delayed_resolving(const Graph& g, const VertexSet& s);

/// Union of the non-singleton distance classes of V(G) w.r.t. s.
VertexSet ambiguous_vertices(const Graph& g, const VertexSet& s);

/// |s| cops parked on s while a rover walks scan_order cyclically; one probe
/// set per round. The factory checks the delayed-resolving precondition and
/// that scan_order covers every ambiguous vertex.
class ScanningStrategy : public CopStrategy {
 public:
  ScanningStrategy(VertexSet fixed, VertexSet scan_order, std::string label = "scanning");

  int cop_count() const override { return static_cast<int>(fixed_.size()) + 1; }
  std::string name() const override { return label_; }
  Placement next_placement(const Graph& g, const GameTranscript& t) const override;

  const VertexSet& fixed_set() const { return fixed_; }
  const VertexSet& scan_order() const { return order_; }

 private:
  VertexSet fixed_;
  VertexSet order_;  // visiting order; kept as given, need not be sorted
  std::string label_;
};

std::unique_ptr<CopStrategy> scanning_strategy(const Graph& g, const VertexSet& s,
                                               const VertexSet& scan_order);

/// Default verification budget.
inline int default_round_budget(const Graph& g) { return 4 * g.n(); }

// Simple adversaries.

/// Picks the class with the most members (ties by canonical order).
class MaxCellAdversary : public RobberAdversary {
 public:
  size_t choose_class(const Graph&, const std::vector<VertexSet>& cells) override;
};

/// Picks the first class in canonical order.
class FirstCellAdversary : public RobberAdversary {
 public:
  size_t choose_class(const Graph&, const std::vector<VertexSet>& cells) override;
};

/// Seeded uniform choice; bit-reproducible across runs.
class SeededRandomAdversary : public RobberAdversary {
 public:
  explicit SeededRandomAdversary(uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  size_t choose_class(const Graph&, const std::vector<VertexSet>& cells) override;

 private:
  uint64_t next();
  uint64_t state_;
};

/// Replays a transcript against the engine: each recorded class must be one
/// of the classes the engine derives. Returns false on the first divergence.
bool transcript_consistent(const Graph& g, const GameTranscript& t);

}  // namespace locgame
