#include "locgame/game.hpp"

#include <future>
#include <map>
#include <set>

namespace locgame {

VertexSet expand(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  for (Vertex v : s) {
    const auto& nb = g.neighbors(v);
    out.insert(out.end(), nb.begin(), nb.end());
  }
  sort_unique(out);
  return out;
}

std::vector<ProbeCell> partition_with_vectors(const Graph& g, const VertexSet& s,
                                              const Placement& p) {
  std::map<DistanceVector, VertexSet> groups;
  DistanceVector key(p.size());
  for (Vertex v : s) {
    for (size_t i = 0; i < p.size(); ++i) key[i] = g.dist(p[i], v);
    groups[key].push_back(v);
  }
  std::vector<ProbeCell> cells;
  cells.reserve(groups.size());
  for (auto& [vec, members] : groups) cells.push_back(ProbeCell{vec, std::move(members)});
  return cells;
}

std::vector<VertexSet> partition_by_probe(const Graph& g, const VertexSet& s,
                                          const Placement& p) {
  std::vector<VertexSet> out;
  for (auto& c : partition_with_vectors(g, s, p)) out.push_back(std::move(c.members));
  return out;
}

namespace {

void check_placement(const Graph& g, const CopStrategy& cs, const Placement& p) {
  if (static_cast<int>(p.size()) > cs.cop_count())
    throw Error(Errc::internal,
                "strategy '" + cs.name() + "' probed " + std::to_string(p.size()) +
                    " vertices with only " + std::to_string(cs.cop_count()) + " cops");
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.n()) throw Error(Errc::internal, "placement out of range");
    if (i > 0 && p[i] <= p[i - 1]) throw Error(Errc::internal, "placement not sorted/unique");
  }
}

}  // namespace

StepResult step(const Graph& g, const VertexSet& s, const Placement& p, RobberAdversary& adv) {
  if (s.empty()) throw Error(Errc::internal, "empty territory");
  auto cells = partition_with_vectors(g, s, p);
  std::vector<VertexSet> open;
  std::vector<size_t> open_idx;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].members.size() >= 2) {
      open.push_back(cells[i].members);
      open_idx.push_back(i);
    }
  }
  StepResult res;
  if (open.empty()) {
    res.outcome = StepOutcome::captured;
    return res;
  }
  size_t choice = adv.choose_class(g, open);
  if (choice >= open.size()) throw Error(Errc::internal, "adversary chose an invalid class");
  const auto& cell = cells[open_idx[choice]];
  res.outcome = StepOutcome::ongoing;
  res.observed = cell.vec;
  res.cell = cell.members;
  res.next = expand(g, cell.members);
  return res;
}

PlayResult play(const Graph& g, const CopStrategy& cs, RobberAdversary& adv, int round_budget) {
  if (!g.connected()) throw Error(Errc::disconnected_graph, "game needs a connected graph");
  PlayResult result;
  result.transcript.initial = g.all_vertices();
  VertexSet territory = result.transcript.initial;
  for (int round = 1; round <= round_budget; ++round) {
    Placement p = cs.next_placement(g, result.transcript);
    check_placement(g, cs, p);
    StepResult sr = step(g, territory, p, adv);
    if (sr.outcome == StepOutcome::captured) {
      result.outcome = PlayOutcome::captured;
      result.rounds = round;
      return result;
    }
    result.transcript.rounds.push_back(Round{p, sr.observed, sr.cell});
    territory = sr.next;
  }
  result.outcome = PlayOutcome::survived;
  result.rounds = round_budget;
  return result;
}

namespace {

struct VerifyCtx {
  const Graph& g;
  const CopStrategy& cs;
  int budget;
};

// Depth-first over all adversary choices. Returns PROVEN with the worst
// capture round, or the first failing branch in canonical order.
Verdict verify_rec(VerifyCtx& ctx, GameTranscript& transcript, const VertexSet& territory,
                   std::vector<std::pair<VertexSet, Placement>>& path, int round) {
  if (round > ctx.budget) {
    Verdict v;
    v.kind = Verdict::Kind::budget_exhausted;
    v.counterexample = transcript;
    return v;
  }
  Placement p = ctx.cs.next_placement(ctx.g, transcript);
  check_placement(ctx.g, ctx.cs, p);
  for (const auto& [seen_t, seen_p] : path) {
    if (seen_t == territory && seen_p == p) {
      Verdict v;
      v.kind = Verdict::Kind::counterexample;
      v.counterexample = transcript;
      return v;
    }
  }
  auto cells = partition_with_vectors(ctx.g, territory, p);
  Verdict best;
  best.kind = Verdict::Kind::proven;
  best.max_rounds = round;
  path.emplace_back(territory, p);
  for (const auto& cell : cells) {
    if (cell.members.size() < 2) continue;
    transcript.rounds.push_back(Round{p, cell.vec, cell.members});
    VertexSet next = expand(ctx.g, cell.members);
    Verdict sub = verify_rec(ctx, transcript, next, path, round + 1);
    transcript.rounds.pop_back();
    if (sub.kind != Verdict::Kind::proven) {
      path.pop_back();
      return sub;
    }
    best.max_rounds = std::max(best.max_rounds, sub.max_rounds);
  }
  path.pop_back();
  return best;
}

}  // namespace

Verdict verify_strategy_exhaustive(const Graph& g, const CopStrategy& cs, int round_budget,
                                   int threads) {
  if (!g.connected()) throw Error(Errc::disconnected_graph, "game needs a connected graph");
  if (round_budget <= 0) round_budget = default_round_budget(g);

  GameTranscript root;
  root.initial = g.all_vertices();
  Placement p0 = cs.next_placement(g, root);
  check_placement(g, cs, p0);
  auto cells = partition_with_vectors(g, root.initial, p0);

  std::vector<const ProbeCell*> open;
  for (const auto& c : cells)
    if (c.members.size() >= 2) open.push_back(&c);

  Verdict total;
  total.kind = Verdict::Kind::proven;
  total.max_rounds = 1;
  if (open.empty()) return total;

  auto eval_branch = [&](const ProbeCell& cell) {
    GameTranscript t = root;
    t.rounds.push_back(Round{p0, cell.vec, cell.members});
    std::vector<std::pair<VertexSet, Placement>> path;
    path.emplace_back(root.initial, p0);
    VerifyCtx local{g, cs, round_budget};
    return verify_rec(local, t, expand(g, cell.members), path, 2);
  };

  std::vector<Verdict> results(open.size());
  if (threads <= 1 || open.size() == 1) {
    for (size_t i = 0; i < open.size(); ++i) results[i] = eval_branch(*open[i]);
  } else {
    std::vector<std::future<Verdict>> futs;
    futs.reserve(open.size());
    for (size_t i = 0; i < open.size(); ++i)
      futs.push_back(std::async(std::launch::async | std::launch::deferred,
                                [&, i] { return eval_branch(*open[i]); }));
    for (size_t i = 0; i < open.size(); ++i) results[i] = futs[i].get();
  }
  for (const auto& r : results) {
    if (r.kind != Verdict::Kind::proven) return r;  // first branch in canonical order
    total.max_rounds = std::max(total.max_rounds, r.max_rounds);
  }
  return total;
}

bool is_delayed_resolving(const Graph& g, const VertexSet& s) {
  VertexSet amb = ambiguous_vertices(g, s);
  for (Vertex u : amb)
    for (Vertex w : g.neighbors(u))
      if (set_contains(amb, w)) return false;
  return true;
}

VertexSet ambiguous_vertexes_impl(const Graph& g, const VertexSet& s) {
  auto cells = partition_with_vectors(g, g.all_vertices(), s);
  VertexSet amb;
  for (const auto& c : cells)
    if (c.members.size() >= 2) amb.insert(amb.end(), c.members.begin(), c.members.end());
  sort_unique(amb);
  return amb;
}

VertexSet ambiguous_vertices(const Graph& g, const VertexSet& s) {
  return ambiguous_vertexes_impl(g, s);
}

ScanningStrategy::ScanningStrategy(VertexSet fixed, VertexSet scan_order, std::string label)
    : fixed_(std::move(fixed)), label_(std::move(label)) {
  sort_unique(fixed_);
  // vertices under a parked cop are permanently probed; the rover skips them
  for (Vertex v : scan_order)
    if (!set_contains(fixed_, v)) order_.push_back(v);
}

Placement ScanningStrategy::next_placement(const Graph&, const GameTranscript& t) const {
  Placement p = fixed_;
  if (!order_.empty()) {
    Vertex rover = order_[t.rounds.size() % order_.size()];
    p.push_back(rover);
    sort_unique(p);
  }
  return p;
}

std::unique_ptr<CopStrategy> scanning_strategy(const Graph& g, const VertexSet& s,
                                               const VertexSet& scan_order) {
  if (!is_delayed_resolving(g, s))
    throw Error(Errc::not_delayed_resolving, "fixed probe set leaves adjacent ambiguous vertices");
  VertexSet amb = ambiguous_vertices(g, s);
  VertexSet order_sorted = scan_order;
  sort_unique(order_sorted);
  if (!is_subset(amb, order_sorted))
    throw Error(Errc::not_delayed_resolving, "scan order does not cover the ambiguous vertices");
  return std::make_unique<ScanningStrategy>(s, scan_order);
}

size_t MaxCellAdversary::choose_class(const Graph&, const std::vector<VertexSet>& cells) {
  size_t best = 0;
  for (size_t i = 1; i < cells.size(); ++i)
    if (cells[i].size() > cells[best].size()) best = i;
  return best;
}

size_t FirstCellAdversary::choose_class(const Graph&, const std::vector<VertexSet>&) {
  return 0;
}

uint64_t SeededRandomAdversary::next() {
  // splitmix64; fixed algorithm keeps runs bit-reproducible everywhere.
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

size_t SeededRandomAdversary::choose_class(const Graph&, const std::vector<VertexSet>& cells) {
  return static_cast<size_t>(next() % cells.size());
}

bool transcript_consistent(const Graph& g, const GameTranscript& t) {
  VertexSet territory = t.initial;
  for (const auto& round : t.rounds) {
    auto cells = partition_with_vectors(g, territory, round.placement);
    bool found = false;
    for (const auto& c : cells) {
      if (c.members == round.cell && c.vec == round.observed) { found = true; break; }
    }
    if (!found) return false;
    territory = expand(g, round.cell);
  }
  return true;
}

}  // namespace locgame
