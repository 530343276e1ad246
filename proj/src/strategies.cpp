#include "locgame/strategies.hpp"

#include <cmath>
#include <map>
#include <set>

namespace locgame {

namespace {

// Point/block incidence lookups in incidence-graph vertex space: point p is
// vertex p, block bi is vertex v + bi.
struct DesignIndex {
  int v = 0;
  std::vector<std::vector<int>> blocks_of_point;  // design block indices, sorted

  explicit DesignIndex(const Design& d) : v(d.v), blocks_of_point(d.v) {
    for (int bi = 0; bi < d.b(); ++bi)
      for (int p : d.blocks[bi]) blocks_of_point[p].push_back(bi);
  }
};

bool all_points(const VertexSet& cell, int v) { return !cell.empty() && cell.back() < v; }
bool all_blocks(const VertexSet& cell, int v) { return !cell.empty() && cell.front() >= v; }

// Unique block containing every point of `cell` (lambda = 1 designs).
int common_block(const DesignIndex& idx, const VertexSet& cell) {
  std::vector<int> acc = idx.blocks_of_point[cell.front()];
  for (size_t i = 1; i < cell.size() && !acc.empty(); ++i) {
    std::vector<int> next;
    const auto& other = idx.blocks_of_point[cell[i]];
    std::set_intersection(acc.begin(), acc.end(), other.begin(), other.end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  if (acc.size() != 1)
    throw Error(Errc::internal, "candidate class has no unique common block");
  return acc.front();
}

// Unique point shared by every block of `cell` (block vertices).
int common_point(const Design& d, const VertexSet& cell) {
  VertexSet acc = d.blocks[cell.front() - d.v];
  for (size_t i = 1; i < cell.size() && !acc.empty(); ++i)
    acc = set_intersection(acc, d.blocks[cell[i] - d.v]);
  if (acc.size() != 1)
    throw Error(Errc::internal, "candidate class has no unique common point");
  return acc.front();
}

VertexSet take_front(const VertexSet& s, size_t n) {
  return VertexSet(s.begin(), s.begin() + std::min(n, s.size()));
}

}  // namespace

FPartition f_partition(const Design& d, int u) {
  DesignIndex idx(d);
  std::map<std::vector<int>, VertexSet> groups;  // fingerprint -> cell
  for (int x = 0; x < d.v; ++x) {
    if (x == u) continue;
    std::vector<int> fp;
    std::set_intersection(idx.blocks_of_point[u].begin(), idx.blocks_of_point[u].end(),
                          idx.blocks_of_point[x].begin(), idx.blocks_of_point[x].end(),
                          std::back_inserter(fp));
    groups[fp].push_back(x);
  }
  FPartition part;
  part.base = u;
  for (auto& [fp, cell] : groups) part.cells.push_back(std::move(cell));
  std::sort(part.cells.begin(), part.cells.end());
  return part;
}

int f_value(const Design& d, int u) {
  int f = 0;
  for (const auto& cell : f_partition(d, u).cells) f += static_cast<int>(cell.size()) - 1;
  return f;
}

int f_of_design(const Design& d) {
  int best = -1;
  for (int u = 0; u < d.v; ++u) {
    int f = f_value(d, u);
    if (best < 0 || f < best) best = f;
  }
  return best;
}

VertexSet two_design_set(const Design& d, int u, int u_prime) {
  DesignParams params = validate_bibd(d);
  if (params.lambda != 1) throw Error(Errc::not_applicable, "needs lambda = 1");
  if (u == u_prime || u < 0 || u_prime < 0 || u >= d.v || u_prime >= d.v)
    throw Error(Errc::not_applicable, "needs two distinct points");
  DesignIndex idx(d);
  std::vector<int> shared;
  std::set_intersection(idx.blocks_of_point[u].begin(), idx.blocks_of_point[u].end(),
                        idx.blocks_of_point[u_prime].begin(), idx.blocks_of_point[u_prime].end(),
                        std::back_inserter(shared));
  if (shared.size() != 1) throw Error(Errc::internal, "lambda=1 pair without a unique block");
  int vblk = shared.front();

  VertexSet s;
  for (int bi : idx.blocks_of_point[u]) s.push_back(d.v + bi);
  for (int bi : idx.blocks_of_point[u_prime]) s.push_back(d.v + bi);
  for (int p : d.blocks[vblk]) s.push_back(p);
  sort_unique(s);
  VertexSet drop{u, u_prime, d.v + vblk};
  sort_unique(drop);
  return set_difference(s, drop);
}

std::unique_ptr<CopStrategy> two_design_strategy(const Design& d, const Graph& g) {
  VertexSet s = two_design_set(d, 0, 1);
  return scanning_strategy(g, s, ambiguous_vertices(g, s));
}

std::unique_ptr<CopStrategy> general_bibd_strategy(const Design& d, const Graph& g) {
  DesignParams params = validate_bibd(d);
  if (!(2 <= params.lambda && params.lambda <= params.r - 1))
    throw Error(Errc::not_applicable, "needs 2 <= lambda <= r-1");
  int ustar = 0, best = -1;
  for (int u = 0; u < d.v; ++u) {
    int f = f_value(d, u);
    if (best < 0 || f < best) { best = f; ustar = u; }
  }
  DesignIndex idx(d);
  VertexSet s;
  for (int bi : idx.blocks_of_point[ustar]) s.push_back(d.v + bi);
  for (const auto& cell : f_partition(d, ustar).cells)
    for (size_t i = 0; i + 1 < cell.size(); ++i) s.push_back(cell[i]);
  sort_unique(s);
  return scanning_strategy(g, s, ambiguous_vertices(g, s));
}

std::vector<BoundEntry> lower_bounds(const Design& d) {
  DesignParams p = validate_bibd(d);
  std::vector<BoundEntry> out;

  {
    // degeneracy bound: smallest integer >= log2(k)
    int m = 0;
    while ((1 << m) < p.k) ++m;
    out.push_back(BoundEntry{BoundEntry::Kind::lower, m, "Thm2.5",
                             "ceil(log2(" + std::to_string(p.k) + "))", "", 0, 0});
  }

  if (p.lambda == 1 && p.k < p.r) {
    long long alpha = std::min(p.k, p.r - p.k);
    long long best_d = 0;
    for (long long dd = 1; dd * alpha <= p.r - 2; ++dd) {
      bool lt_max = dd < p.k ||
                    dd * (p.k + 1 + 2 * (p.k - 1) * alpha) < 2LL * p.r * (p.k - 1) - 2;
      if (lt_max) best_d = dd;
    }
    if (best_d >= 1)
      out.push_back(BoundEntry{BoundEntry::Kind::lower, best_d + 1, "Thm2.6",
                               "d=" + std::to_string(best_d) +
                                   " alpha=" + std::to_string(alpha),
                               "", 0, 0});
  }

  if (p.symmetric && p.lambda == 1)
    out.push_back(BoundEntry{BoundEntry::Kind::lower, p.k, "Thm3.1",
                             "symmetric, exceeds k-1", "", 0, 0});

  if (p.lambda == 1 && p.k == 3 && p.v > 9)
    out.push_back(BoundEntry{BoundEntry::Kind::lower, (p.v - 2) / 8 + 1, "Cor4.1",
                             "exceeds floor((v-2)/8)=" + std::to_string((p.v - 2) / 8), "",
                             0, 0});
  return out;
}

// ---------------------------------------------------------------------------
// Two-step pinning strategy shared by the symmetric (r = k) and
// near-symmetric (r = k+1) cases. A scan over the block side forces the
// robber into a class A inside one block's points; afterwards the strategy
// alternates:
//   points step: cover A, pin blocks through A's points via a block through
//                the anchor point;
//   blocks step: cover A, pin points of A's blocks via a point of the anchor
//                block.
// A 2-element class is covered entirely so two probes still pin the host;
// larger classes leave exactly one vertex uncovered.

class TwoStepStrategy final : public CopStrategy {
 public:
  TwoStepStrategy(Design d, int cop_total, std::string label)
      : d_(std::move(d)), idx_(d_), total_(cop_total), label_(std::move(label)) {
    const auto& bu = idx_.blocks_of_point[base_];
    for (size_t i = 0; i + 1 < bu.size(); ++i) cover_.push_back(d_.v + bu[i]);
    std::vector<char> through_u(d_.b(), 0);
    for (int bi : bu) through_u[bi] = 1;
    for (int bi = 0; bi < d_.b(); ++bi)
      if (!through_u[bi]) scan_list_.push_back(d_.v + bi);
  }

  int cop_count() const override { return total_; }
  std::string name() const override { return label_; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    State s = replay(t);
    return placement_for(s);
  }

 private:
  struct State {
    enum class Phase { scan, step_points, step_blocks } phase = Phase::scan;
    int scan_rounds = 0;
    Vertex host = -1;    // block vertex in step_points, point in step_blocks
    Vertex anchor = -1;  // opposite side, incident to host
    VertexSet cell;
  };

  State replay(const GameTranscript& t) const {
    State s;
    for (const auto& round : t.rounds) {
      const VertexSet& c = round.cell;
      if (s.phase == State::Phase::scan) {
        if (all_blocks(c, d_.v)) {
          ++s.scan_rounds;
        } else if (all_points(c, d_.v)) {
          s.phase = State::Phase::step_points;
          s.host = d_.v + common_block(idx_, c);
          s.anchor = base_;
          s.cell = c;
        } else {
          throw Error(Errc::internal, "mixed candidate class");
        }
      } else if (s.phase == State::Phase::step_points) {
        if (!all_blocks(c, d_.v)) throw Error(Errc::internal, "expected a block-side class");
        Vertex prev_host = s.host;
        s.host = common_point(d_, c);
        s.anchor = prev_host;
        s.phase = State::Phase::step_blocks;
        s.cell = c;
      } else {
        if (!all_points(c, d_.v)) throw Error(Errc::internal, "expected a point-side class");
        Vertex prev_host = s.host;
        s.host = d_.v + common_block(idx_, c);
        s.anchor = prev_host;
        s.phase = State::Phase::step_points;
        s.cell = c;
      }
    }
    return s;
  }

  Placement placement_for(const State& s) const {
    if (s.phase == State::Phase::scan) {
      Placement p = cover_;
      p.push_back(scan_list_[s.scan_rounds % scan_list_.size()]);
      sort_unique(p);
      return p;
    }
    size_t cover_cnt = s.cell.size() >= 3 ? s.cell.size() - 1 : s.cell.size();
    VertexSet line;
    if (s.phase == State::Phase::step_points) {
      // pins on points of another block through the anchor point
      int avoid = s.host - d_.v;
      int vprime = -1;
      for (int bi : idx_.blocks_of_point[s.anchor])
        if (bi != avoid) { vprime = bi; break; }
      if (vprime < 0) throw Error(Errc::internal, "anchor has a unique block");
      line = d_.blocks[vprime];
      line.erase(std::remove(line.begin(), line.end(), s.anchor), line.end());
    } else {
      // pins on blocks through another point of the anchor block
      const auto& anchor_pts = d_.blocks[s.anchor - d_.v];
      int pprime = -1;
      for (int p : anchor_pts)
        if (p != s.host) { pprime = p; break; }
      if (pprime < 0) throw Error(Errc::internal, "anchor block has a unique point");
      for (int bi : idx_.blocks_of_point[pprime])
        if (d_.v + bi != s.anchor) line.push_back(d_.v + bi);
    }
    size_t pins = std::min(static_cast<size_t>(total_) - cover_cnt, line.size());
    Placement p = take_front(s.cell, cover_cnt);
    VertexSet pin_set = take_front(line, pins);
    p.insert(p.end(), pin_set.begin(), pin_set.end());
    sort_unique(p);
    return p;
  }

  Design d_;
  DesignIndex idx_;
  int total_;
  std::string label_;
  Vertex base_ = 0;
  VertexSet cover_;      // block vertices of N(base) minus the last
  VertexSet scan_list_;  // block vertices outside N(base)
};

std::unique_ptr<CopStrategy> symmetric_strategy(const Design& d) {
  DesignParams p = validate_bibd(d);
  if (!(p.symmetric && p.lambda == 1 && p.k >= 3))
    throw Error(Errc::not_applicable, "needs a symmetric lambda=1 design with k >= 3");
  return std::make_unique<TwoStepStrategy>(d, p.k, "symmetric");
}

std::unique_ptr<CopStrategy> near_symmetric_strategy(const Design& d) {
  DesignParams p = validate_bibd(d);
  if (!(p.lambda == 1 && p.r == p.k + 1 && p.k >= 3))
    throw Error(Errc::not_applicable, "needs lambda=1 with r = k+1 and k >= 3");
  return std::make_unique<TwoStepStrategy>(d, p.k + 1, "near-symmetric");
}

// ---------------------------------------------------------------------------
// Affine strategy: the scan parks cops on a parallel class, and the pinning
// steps draw their pin lines from parallel classes (a block parallel to the
// host for point classes, the anchor block's class for block classes).

class AffineStrategy final : public CopStrategy {
 public:
  explicit AffineStrategy(ResolvedDesign rd)
      : rd_(std::move(rd)), idx_(rd_.design), k_(static_cast<int>(rd_.design.blocks.front().size())) {
    class_of_.assign(rd_.design.b(), -1);
    for (size_t ci = 0; ci < rd_.classes.size(); ++ci)
      for (int bi : rd_.classes[ci]) class_of_[bi] = static_cast<int>(ci);
    const auto& cls0 = rd_.classes.front();
    for (size_t i = 0; i + 1 < cls0.size(); ++i) cover_.push_back(rd_.design.v + cls0[i]);
    std::vector<char> in0(rd_.design.b(), 0);
    for (int bi : cls0) in0[bi] = 1;
    for (int bi = 0; bi < rd_.design.b(); ++bi)
      if (!in0[bi]) scan_list_.push_back(rd_.design.v + bi);
  }

  int cop_count() const override { return k_; }
  std::string name() const override { return "affine"; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    State s = replay(t);
    return placement_for(s);
  }

 private:
  struct State {
    enum class Phase { scan, step_points, step_blocks } phase = Phase::scan;
    int scan_rounds = 0;
    Vertex host = -1;         // block vertex in step_points, point in step_blocks
    Vertex anchor_block = -1; // previous host blockes feeding the pin class
    VertexSet cell;
  };

  State replay(const GameTranscript& t) const {
    const int v = rd_.design.v;
    State s;
    for (const auto& round : t.rounds) {
      const VertexSet& c = round.cell;
      if (s.phase == State::Phase::scan) {
        if (all_blocks(c, v)) {
          ++s.scan_rounds;
        } else {
          s.phase = State::Phase::step_points;
          s.host = v + common_block(idx_, c);
          s.cell = c;
        }
      } else if (s.phase == State::Phase::step_points) {
        if (!all_blocks(c, v)) throw Error(Errc::internal, "expected a block-side class");
        s.anchor_block = s.host;
        s.host = common_point(rd_.design, c);
        s.phase = State::Phase::step_blocks;
        s.cell = c;
      } else {
        if (!all_points(c, v)) throw Error(Errc::internal, "expected a point-side class");
        s.host = v + common_block(idx_, c);
        s.phase = State::Phase::step_points;
        s.cell = c;
      }
    }
    return s;
  }

  Placement placement_for(const State& s) const {
    const int v = rd_.design.v;
    if (s.phase == State::Phase::scan) {
      Placement p = cover_;
      p.push_back(scan_list_[s.scan_rounds % scan_list_.size()]);
      sort_unique(p);
      return p;
    }
    size_t cover_cnt = s.cell.size() >= 3 ? s.cell.size() - 1 : s.cell.size();
    VertexSet line;
    if (s.phase == State::Phase::step_points) {
      // pin with the points of a block parallel to the host
      int host_bi = s.host - v;
      for (int bi : rd_.classes[class_of_[host_bi]])
        if (bi != host_bi) { line = rd_.design.blocks[bi]; break; }
    } else {
      // pin with the other blocks of the anchor block's parallel class
      int anchor_bi = s.anchor_block - v;
      for (int bi : rd_.classes[class_of_[anchor_bi]])
        if (bi != anchor_bi) line.push_back(v + bi);
    }
    size_t pins = std::min(static_cast<size_t>(k_) - cover_cnt, line.size());
    Placement p = take_front(s.cell, cover_cnt);
    VertexSet pin_set = take_front(line, pins);
    p.insert(p.end(), pin_set.begin(), pin_set.end());
    sort_unique(p);
    return p;
  }

  ResolvedDesign rd_;
  DesignIndex idx_;
  int k_;
  std::vector<int> class_of_;
  VertexSet cover_;
  VertexSet scan_list_;
};

std::unique_ptr<CopStrategy> affine_strategy(const ResolvedDesign& ap) {
  check_resolution(ap);
  DesignParams p = validate_bibd(ap.design);
  if (!(p.lambda == 1 && p.r == p.k + 1 && p.k >= 3 && p.v == p.k * p.k))
    throw Error(Errc::not_applicable, "needs a resolved affine plane of order k >= 3");
  return std::make_unique<AffineStrategy>(ap);
}

// ---------------------------------------------------------------------------
// Steiner triple system strategy on (v+1)/2 cops: probe the half A, then
// depending on the surviving class probe B (plus a spare), B plus the hit
// point, or A minus one point plus the hit point.

class StsHalfStrategy final : public CopStrategy {
 public:
  explicit StsHalfStrategy(Design d) : d_(std::move(d)) {
    int half = (d_.v + 1) / 2;
    for (int p = 0; p < half; ++p) a_.push_back(p);
    for (int p = half; p < d_.v; ++p) b_.push_back(p);
  }

  int cop_count() const override { return static_cast<int>(a_.size()); }
  std::string name() const override { return "sts-half"; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    if (t.rounds.empty()) return a_;
    const VertexSet& c1 = t.rounds.front().cell;
    if (t.rounds.size() == 1) {
      if (all_points(c1, d_.v)) {
        // robber loose on the B half
        Placement p = b_;
        p.push_back(a_.front());
        sort_unique(p);
        return p;
      }
      int hit = a_hit(c1);
      if (hit < 0) {  // blocks entirely inside B
        Placement p = b_;
        p.push_back(a_.front());
        sort_unique(p);
        return p;
      }
      Placement p = b_;
      p.push_back(hit);
      sort_unique(p);
      return p;
    }
    if (t.rounds.size() == 2 && all_points(c1, d_.v)) {
      const VertexSet& c2 = t.rounds[1].cell;
      if (!all_blocks(c2, d_.v)) throw Error(Errc::internal, "expected a block-side class");
      int hit = b_hit(c2);
      if (hit < 0) throw Error(Errc::internal, "expected blocks through one B point");
      Placement p(a_.begin() + 1, a_.end());
      p.push_back(hit);
      sort_unique(p);
      return p;
    }
    throw Error(Errc::internal, "triple-system case analysis exhausted");
  }

 private:
  // The unique point of A (resp. B) on every block of the class, or -1.
  int a_hit(const VertexSet& cell) const { return unique_hit(cell, a_); }
  int b_hit(const VertexSet& cell) const { return unique_hit(cell, b_); }

  int unique_hit(const VertexSet& cell, const VertexSet& side) const {
    int hit = -2;
    for (Vertex bv : cell) {
      const auto& blk = d_.blocks[bv - d_.v];
      VertexSet inter = set_intersection(blk, side);
      int h = inter.size() == 1 ? inter.front() : -1;
      if (inter.size() > 1) throw Error(Errc::internal, "class with a doubly-covered block");
      if (hit == -2) hit = h;
      else if (hit != h) throw Error(Errc::internal, "class mixes hit points");
    }
    return hit;
  }

  Design d_;
  VertexSet a_, b_;
};

std::unique_ptr<CopStrategy> sts_half_strategy(const Design& d) {
  DesignParams p = validate_bibd(d);
  if (!(p.lambda == 1 && p.k == 3 && p.v >= 7))
    throw Error(Errc::not_applicable, "needs a Steiner triple system");
  return std::make_unique<StsHalfStrategy>(d);
}

// ---------------------------------------------------------------------------

Packing max_partial_parallel_class(const Design& d, long long node_budget) {
  check_design_shape(d);
  if (d.blocks.empty()) throw Error(Errc::empty_design, "design has no blocks");
  const int v = d.v;
  const int k = static_cast<int>(d.blocks.front().size());
  DesignIndex idx(d);

  std::vector<int> best;
  std::vector<int> chosen;
  std::vector<char> covered(v, 0), skipped(v, 0);
  long long nodes = 0;
  int covered_cnt = 0, skipped_cnt = 0;

  auto rec = [&](auto&& self) -> void {
    if (++nodes > node_budget)
      throw Error(Errc::budget_exhausted, "packing search exceeded its node budget");
    // upper bound: every further block needs k currently free points
    size_t potential = chosen.size() + static_cast<size_t>((v - covered_cnt - skipped_cnt) / k);
    if (potential <= best.size() && !best.empty()) return;
    int p = -1;
    for (int x = 0; x < v; ++x)
      if (!covered[x] && !skipped[x]) { p = x; break; }
    if (p < 0) {
      if (chosen.size() > best.size()) best = chosen;
      return;
    }
    for (int bi : idx.blocks_of_point[p]) {
      bool ok = true;
      for (int x : d.blocks[bi])
        if (covered[x] || skipped[x]) { ok = false; break; }
      if (!ok) continue;
      for (int x : d.blocks[bi]) covered[x] = 1;
      covered_cnt += k;
      chosen.push_back(bi);
      self(self);
      chosen.pop_back();
      covered_cnt -= k;
      for (int x : d.blocks[bi]) covered[x] = 0;
    }
    skipped[p] = 1;
    ++skipped_cnt;
    self(self);
    --skipped_cnt;
    skipped[p] = 0;
  };
  rec(rec);

  if (chosen.size() > best.size()) best = chosen;
  Packing packing;
  packing.blocks = best;
  std::sort(packing.blocks.begin(), packing.blocks.end());
  std::vector<char> cov(v, 0);
  for (int bi : packing.blocks)
    for (int x : d.blocks[bi]) cov[x] = 1;
  for (int x = 0; x < v; ++x)
    if (!cov[x]) packing.uncovered.push_back(x);
  return packing;
}

// ---------------------------------------------------------------------------
// Matching strategy: cops parked on the packing blocks T and leftover points
// Q. A class of points inside one T-block is chased point by point; a class
// of blocks is answered by probing every point those blocks touch, which the
// packing pattern keeps small.

class MatchingStrategy final : public CopStrategy {
 public:
  MatchingStrategy(Design d, Packing packing, int cops, std::string label)
      : d_(std::move(d)), pack_(std::move(packing)), cops_(cops), label_(std::move(label)) {
    base_ = pack_.uncovered;
    for (int bi : pack_.blocks) base_.push_back(d_.v + bi);
    sort_unique(base_);
  }

  int cop_count() const override { return cops_; }
  std::string name() const override { return label_; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    if (t.rounds.empty()) return base_;
    const VertexSet& last = t.rounds.back().cell;
    if (all_points(last, d_.v)) {
      // chase inside the packing block containing the class
      int tau = -1;
      for (int bi : pack_.blocks)
        if (is_subset(last, d_.blocks[bi])) { tau = bi; break; }
      if (tau < 0) throw Error(Errc::internal, "point class escapes the packing");
      size_t streak = 0;
      for (auto it = t.rounds.rbegin(); it != t.rounds.rend(); ++it) {
        if (all_points(it->cell, d_.v)) ++streak;
        else break;
      }
      if (streak > d_.blocks[tau].size())
        throw Error(Errc::internal, "chase outlived the block");
      Placement p = base_;
      p.push_back(d_.blocks[tau][streak - 1]);
      sort_unique(p);
      return p;
    }
    // block class: probe every point those blocks contain
    VertexSet pts;
    for (Vertex bv : last) {
      const auto& blk = d_.blocks[bv - d_.v];
      pts.insert(pts.end(), blk.begin(), blk.end());
    }
    sort_unique(pts);
    if (static_cast<int>(pts.size()) > cops_)
      throw Error(Errc::internal, "block class touches more points than cops");
    return pts;
  }

 private:
  Design d_;
  Packing pack_;
  int cops_;
  std::string label_;
  VertexSet base_;
};

std::unique_ptr<CopStrategy> sts_matching_strategy(const Design& d) {
  DesignParams p = validate_bibd(d);
  if (!(p.lambda == 1 && p.k == 3))
    throw Error(Errc::not_applicable, "needs a Steiner triple system");
  Packing pack = max_partial_parallel_class(d);
  int cops = static_cast<int>(pack.blocks.size() + pack.uncovered.size()) + 1;
  if (cops < 9)
    throw Error(Errc::not_applicable,
                "t + |Q| + 1 = " + std::to_string(cops) + " is below the floor of 9");
  return std::make_unique<MatchingStrategy>(d, std::move(pack), cops, "sts-matching");
}

std::unique_ptr<CopStrategy> steiner_matching_strategy(const Design& d, int t, int k) {
  if (d.blocks.empty() || static_cast<int>(d.blocks.front().size()) != k)
    throw Error(Errc::not_applicable, "block size does not match k");
  if (!validate_steiner(d, t))
    throw Error(Errc::not_applicable, "not an S(t,k,v)");
  Packing pack = max_partial_parallel_class(d);

  // Worst response: a block class shares its packing pattern, so it touches
  // at most the points of its pattern blocks plus its uncovered points.
  std::vector<char> in_t(d.b(), 0);
  for (int bi : pack.blocks) in_t[bi] = 1;
  std::map<std::pair<VertexSet, std::vector<int>>, VertexSet> patterns;
  for (int bi = 0; bi < d.b(); ++bi) {
    if (in_t[bi]) continue;
    VertexSet qhits = set_intersection(d.blocks[bi], pack.uncovered);
    std::vector<int> met;
    for (int ti : pack.blocks)
      if (!sets_disjoint(d.blocks[bi], d.blocks[ti])) met.push_back(ti);
    auto& pts = patterns[{qhits, met}];
    pts.insert(pts.end(), d.blocks[bi].begin(), d.blocks[bi].end());
    sort_unique(pts);
  }
  size_t base_cops = pack.blocks.size() + pack.uncovered.size() + 1;
  size_t need = base_cops;
  for (const auto& [key, pts] : patterns) need = std::max(need, pts.size());
  return std::make_unique<MatchingStrategy>(d, std::move(pack), static_cast<int>(need),
                                            "steiner-matching");
}

// ---------------------------------------------------------------------------

class SqsStrategy final : public CopStrategy {
 public:
  explicit SqsStrategy(Design d) : d_(std::move(d)) {
    for (int p = 3; p < d_.v; ++p) first_.push_back(p);
    for (int p = 0; p < d_.v; ++p)
      if (p < 3 || p > 5) second_.push_back(p);
  }

  int cop_count() const override { return d_.v - 3; }
  std::string name() const override { return "sqs"; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    if (t.rounds.empty()) return first_;
    if (t.rounds.size() == 1) return second_;
    throw Error(Errc::internal, "quadruple-system case analysis exhausted");
  }

 private:
  Design d_;
  VertexSet first_, second_;
};

std::unique_ptr<CopStrategy> sqs_strategy(const Design& d) {
  if (d.v < 8 || d.blocks.empty() || d.blocks.front().size() != 4 || !validate_steiner(d, 3))
    throw Error(Errc::not_applicable, "needs an S(3,4,v)");
  return std::make_unique<SqsStrategy>(d);
}

// ---------------------------------------------------------------------------
// Transversal design strategy: scan the point side from group 0, identify the
// group-0 point u next to the robber's block, probe N(u), then pin via
// N(v) \ {u} and G0 \ {u}.

class TdStrategy final : public CopStrategy {
 public:
  explicit TdStrategy(GroupedDesign gd)
      : gd_(std::move(gd)), idx_(gd_.design),
        n_(static_cast<int>(gd_.groups.front().size())),
        k_(static_cast<int>(gd_.groups.size())) {
    const auto& g0 = gd_.groups.front();
    for (size_t i = 0; i + 1 < g0.size(); ++i) cover_.push_back(g0[i]);
    std::vector<char> in0(gd_.design.v, 0);
    for (int p : g0) in0[p] = 1;
    for (int p = 0; p < gd_.design.v; ++p)
      if (!in0[p]) scan_list_.push_back(p);
  }

  int cop_count() const override { return n_ + k_ - 4; }
  std::string name() const override { return "td"; }

  Placement next_placement(const Graph&, const GameTranscript& t) const override {
    const int v = gd_.design.v;
    int scan_rounds = 0;
    int phase = 0;  // 0 scan, 1 after N(u), 2 final pin
    Vertex u = -1;
    int vblk = -1;
    for (const auto& round : t.rounds) {
      const VertexSet& c = round.cell;
      if (phase == 0) {
        if (all_points(c, v)) {
          ++scan_rounds;
        } else {
          u = group0_contact(c);
          phase = 1;
        }
      } else if (phase == 1) {
        if (!all_points(c, v)) throw Error(Errc::internal, "expected a point-side class");
        VertexSet with_u = c;
        with_u.push_back(u);
        sort_unique(with_u);
        vblk = common_block(idx_, with_u);
        phase = 2;
      } else {
        throw Error(Errc::internal, "transversal case analysis exhausted");
      }
    }
    if (phase == 0) {
      Placement p = cover_;
      p.push_back(scan_list_[scan_rounds % scan_list_.size()]);
      sort_unique(p);
      return p;
    }
    if (phase == 1) {
      Placement p;
      for (int bi : idx_.blocks_of_point[u]) p.push_back(v + bi);
      sort_unique(p);
      return p;
    }
    VertexSet bpts = gd_.design.blocks[vblk];
    bpts.erase(std::remove(bpts.begin(), bpts.end(), u), bpts.end());
    Placement p = take_front(bpts, static_cast<size_t>(k_ - 2));
    VertexSet g0 = gd_.groups.front();
    g0.erase(std::remove(g0.begin(), g0.end(), u), g0.end());
    VertexSet g0part = take_front(g0, static_cast<size_t>(n_ - 2));
    p.insert(p.end(), g0part.begin(), g0part.end());
    sort_unique(p);
    return p;
  }

 private:
  // The unique group-0 point lying on every block of the class.
  Vertex group0_contact(const VertexSet& cell) const {
    Vertex u = -1;
    for (Vertex bv : cell) {
      VertexSet inter = set_intersection(gd_.design.blocks[bv - gd_.design.v], gd_.groups.front());
      if (inter.size() != 1) throw Error(Errc::internal, "block misses group 0");
      if (u < 0) u = inter.front();
      else if (u != inter.front()) throw Error(Errc::internal, "class mixes group-0 contacts");
    }
    return u;
  }

  GroupedDesign gd_;
  DesignIndex idx_;
  int n_, k_;
  VertexSet cover_;      // group 0 minus its last point
  VertexSet scan_list_;  // points outside group 0
};

std::unique_ptr<CopStrategy> td_strategy(const GroupedDesign& td) {
  check_transversal(td);
  if (static_cast<int>(td.groups.size()) < 4)
    throw Error(Errc::not_applicable, "needs a TD(k,n) with k >= 4");
  return std::make_unique<TdStrategy>(td);
}

// ---------------------------------------------------------------------------

SymmetricRobber::SymmetricRobber(const Graph&, int) {}

namespace {

int side_count(const Graph& g, const VertexSet& cell, Side s) {
  int cnt = 0;
  for (Vertex v : cell)
    if (g.side(v) == s) ++cnt;
  return cnt;
}

size_t lex_smallest_with(const Graph& g, const std::vector<VertexSet>& cells, Side s,
                         bool& found) {
  size_t best = 0;
  found = false;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (side_count(g, cells[i], s) < 2) continue;
    if (!found || cells[i] < cells[best]) { best = i; found = true; }
  }
  return best;
}

}  // namespace

std::optional<std::pair<size_t, bool>> symmetric_robber_choice(
    const Graph& g, const std::vector<VertexSet>& cells, bool prefer_block) {
  Side want = prefer_block ? Side::block : Side::point;
  Side other = prefer_block ? Side::point : Side::block;
  bool found = false;
  size_t pick = lex_smallest_with(g, cells, want, found);
  if (found) return std::make_pair(pick, !prefer_block);
  pick = lex_smallest_with(g, cells, other, found);
  if (found) return std::make_pair(pick, prefer_block);  // stall; alternation resumes
  return std::nullopt;
}

size_t SymmetricRobber::choose_class(const Graph& g, const std::vector<VertexSet>& cells) {
  auto choice = symmetric_robber_choice(g, cells, preferred_block_next_ != 0);
  if (!choice) {
    ++violations_;
    return 0;
  }
  preferred_block_next_ = choice->second ? 1 : 0;
  return choice->first;
}

std::unique_ptr<SymmetricRobber> symmetric_robber(const Design& d, const Graph& g,
                                                  int cop_count) {
  DesignParams p = validate_bibd(d);
  if (!(p.symmetric && p.lambda == 1))
    throw Error(Errc::not_applicable, "needs a symmetric lambda=1 design");
  if (cop_count > p.k - 1)
    throw Error(Errc::not_applicable, "robber argument needs at most k-1 cops");
  return std::make_unique<SymmetricRobber>(g, cop_count);
}

GeneralRobber::GeneralRobber(const Design& d, const Graph&, int dd) {
  DesignParams p = validate_bibd(d);
  long long alpha = std::min(p.k, p.r - p.k);
  block_target_ = static_cast<int>(std::max(2LL, p.r - dd * alpha));
}

size_t GeneralRobber::choose_class(const Graph& g, const std::vector<VertexSet>& cells) {
  if (expect_blocks_) {
    // keep the largest chunk of N(anchor) alive
    size_t best = 0;
    int best_cnt = -1;
    for (size_t i = 0; i < cells.size(); ++i) {
      int cnt = 0;
      for (Vertex x : cells[i])
        if (g.side(x) == Side::block && g.adjacent(anchor_point_, x)) ++cnt;
      if (cnt > best_cnt) { best_cnt = cnt; best = i; }
    }
    if (best_cnt < block_target_) ++violations_;
    expect_blocks_ = false;
    return best;
  }
  size_t best = 0;
  int best_cnt = -1;
  for (size_t i = 0; i < cells.size(); ++i) {
    int cnt = side_count(g, cells[i], Side::point);
    if (cnt > best_cnt) { best_cnt = cnt; best = i; }
  }
  if (best_cnt < 2) ++violations_;
  Vertex anchor = -1;
  for (Vertex x : cells[best])
    if (g.side(x) == Side::point) { anchor = x; break; }
  if (anchor >= 0) anchor_point_ = anchor;
  expect_blocks_ = true;
  return best;
}

std::unique_ptr<GeneralRobber> general_robber(const Design& d, const Graph& g, int dd) {
  DesignParams p = validate_bibd(d);
  if (!(p.lambda == 1 && p.k < p.r))
    throw Error(Errc::not_applicable, "needs lambda=1 with k < r");
  long long alpha = std::min(p.k, p.r - p.k);
  bool in_range = dd >= 1 && dd * alpha <= p.r - 2 &&
                  (dd < p.k || dd * (p.k + 1 + 2 * (p.k - 1) * alpha) < 2LL * p.r * (p.k - 1) - 2);
  if (!in_range) throw Error(Errc::not_applicable, "d outside the escape range");
  return std::make_unique<GeneralRobber>(d, g, dd);
}

// ---------------------------------------------------------------------------

std::optional<long long> BoundReport::best_lower() const {
  std::optional<long long> best;
  for (const auto& e : entries)
    if (e.kind == BoundEntry::Kind::lower && (!best || e.value > *best)) best = e.value;
  return best;
}

std::optional<long long> BoundReport::best_proven_upper() const {
  std::optional<long long> best;
  for (const auto& e : entries)
    if (e.kind == BoundEntry::Kind::upper && e.verdict == "PROVEN" && (!best || e.value < *best))
      best = e.value;
  return best;
}

BoundReport bounds_report(const Design& d, const std::string& design_id,
                          const BoundsOptions& opts) {
  BoundReport report;
  report.design_id = design_id;
  report.params = validate_bibd(d);
  report.entries = lower_bounds(d);

  Graph g = Graph::incidence(d);
  int budget = opts.round_budget > 0 ? opts.round_budget : default_round_budget(g);
  bool desk_scale = g.n() <= opts.verify_vertex_cap;

  auto add_upper = [&](std::unique_ptr<CopStrategy> cs, long long value,
                       const std::string& theorem, const std::string& note) {
    BoundEntry e;
    e.kind = BoundEntry::Kind::upper;
    e.value = value;
    e.theorem = theorem;
    e.note = note;
    e.cops = cs->cop_count();
    if (desk_scale) {
      Verdict verdict = verify_strategy_exhaustive(g, *cs, budget, opts.threads);
      e.verdict = verdict.proven() ? "PROVEN" : "FAILED";
      e.rounds = verdict.proven() ? verdict.max_rounds : 0;
    } else {
      e.verdict = "UNVERIFIED";
      e.note = e.note.empty() ? "unverified (size)" : e.note + "; unverified (size)";
    }
    report.entries.push_back(e);
  };

  const DesignParams& p = report.params;

  if (2 <= p.lambda && p.lambda <= p.r - 1) {
    try {
      auto cs = general_bibd_strategy(d, g);
      add_upper(std::move(cs), f_of_design(d) + p.r + 1, "Thm2.4",
                "f(G)=" + std::to_string(f_of_design(d)));
    } catch (const Error&) {}
  }
  if (p.lambda == 1 && d.v >= 2) {
    try {
      auto cs = two_design_strategy(d, g);
      add_upper(std::move(cs), 2LL * p.r + p.k - 3, "Cor2.5", "scanning two-point set");
    } catch (const Error&) {}
  }
  try {
    auto cs = symmetric_strategy(d);
    add_upper(std::move(cs), p.k, "Thm3.2", "");
  } catch (const Error&) {}
  try {
    auto cs = near_symmetric_strategy(d);
    add_upper(std::move(cs), p.k + 1, "Thm3.4", "");
  } catch (const Error&) {}
  if (p.lambda == 1 && p.r == p.k + 1 && p.k >= 3 && p.v == p.k * p.k) {
    if (auto rd = recover_resolution(d)) {
      try {
        auto cs = affine_strategy(*rd);
        add_upper(std::move(cs), p.k, "Thm3.6", "parallel classes recovered");
      } catch (const Error&) {}
    }
  }
  try {
    auto cs = sts_half_strategy(d);
    add_upper(std::move(cs), (p.v + 1) / 2, "Thm4.2", "");
  } catch (const Error&) {}
  if (p.lambda == 1 && p.k == 3) {
    try {
      auto cs = sts_matching_strategy(d);
      int cops = cs->cop_count();
      add_upper(std::move(cs), cops, "Thm4.3", "exact-packing instantiation");
    } catch (const Error&) {}
  }
  try {
    auto cs = sqs_strategy(d);
    add_upper(std::move(cs), p.v - 3, "Thm4.5", "");
  } catch (const Error&) {}
  if (p.lambda == 1 && p.k >= 4) {
    try {
      auto cs = steiner_matching_strategy(d, 2, p.k);
      int cops = cs->cop_count();
      add_upper(std::move(cs), cops, "Thm4.6", "exact-packing instantiation");
    } catch (const Error&) {}
  }
  if (auto gd = recover_grouping(d)) {
    if (gd->groups.size() >= 4) {
      try {
        auto cs = td_strategy(*gd);
        int n = static_cast<int>(gd->groups.front().size());
        int k = static_cast<int>(gd->groups.size());
        add_upper(std::move(cs), n + k - 4, "Thm5.1", "groups recovered");
      } catch (const Error&) {}
    }
  }
  return report;
}

}  // namespace locgame
