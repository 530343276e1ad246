#include "locgame/solver.hpp"

#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

namespace locgame {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;
constexpr int kMaxProbes = 8;  // distances packed 8 bits x 8 probes

struct SetHash {
  size_t operator()(const VertexSet& s) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : s) {
      h ^= static_cast<uint64_t>(v) + 1;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Enumerates nonempty subsets of 0..n-1 of size 1..k in lexicographic order.
struct SubsetIter {
  int n, k;
  std::vector<int> comb;

  SubsetIter(int n_, int k_) : n(n_), k(std::min(k_, n_)), comb{0} {}

  bool valid() const { return !comb.empty(); }

  void advance() {
    // extend first (next in lex order), otherwise increment
    if (static_cast<int>(comb.size()) < k && comb.back() + 1 < n) {
      comb.push_back(comb.back() + 1);
      return;
    }
    while (!comb.empty()) {
      if (comb.back() + 1 < n) {
        ++comb.back();
        return;
      }
      comb.pop_back();
    }
  }
};

struct Solver {
  const Graph& g;
  int k;
  Budgets budgets;
  int threads;

  std::unordered_map<VertexSet, uint32_t, SetHash> ids;
  std::vector<VertexSet> sets;
  std::vector<int> bound;
  std::vector<Placement> immediate_move;
  bool state_budget_hit = false;

  Solver(const Graph& g_, int k_, const Budgets& b, int t) : g(g_), k(k_), budgets(b), threads(t) {
    if (budgets.max_rounds <= 0) budgets.max_rounds = 3 * g.n();
  }

  uint32_t intern(const VertexSet& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    if (static_cast<long long>(sets.size()) >= budgets.max_states) {
      state_budget_hit = true;
      return UINT32_MAX;
    }
    uint32_t id = static_cast<uint32_t>(sets.size());
    ids.emplace(s, id);
    sets.push_back(s);
    bound.push_back(kInf);
    immediate_move.emplace_back();
    return id;
  }

  // Distance keys of the territory under one placement; true iff every class
  // is a singleton.
  bool fill_keys(const VertexSet& s, const std::vector<int>& probes,
                 std::vector<uint64_t>& keys) const {
    keys.resize(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
      uint64_t key = 0;
      for (size_t j = 0; j < probes.size(); ++j)
        key |= static_cast<uint64_t>(g.dist(probes[j], s[i]) & 0xff) << (8 * j);
      keys[i] = key;
    }
    bool all_singleton = true;
    for (size_t i = 0; i < s.size() && all_singleton; ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (keys[i] == keys[j]) { all_singleton = false; break; }
    return all_singleton;
  }

  // Visits every class of size >= 2 as a vertex set.
  template <typename Fn>
  void each_open_cell(const VertexSet& s, const std::vector<uint64_t>& keys, Fn&& fn) const {
    std::vector<char> done(s.size(), 0);
    VertexSet cell;
    for (size_t i = 0; i < s.size(); ++i) {
      if (done[i]) continue;
      cell.clear();
      cell.push_back(s[i]);
      for (size_t j = i + 1; j < s.size(); ++j) {
        if (!done[j] && keys[j] == keys[i]) {
          done[j] = 1;
          cell.push_back(s[j]);
        }
      }
      if (cell.size() >= 2) fn(cell);
    }
  }

  // Reachability closure; marks immediate wins and stops expanding them.
  void reach() {
    intern(g.all_vertices());
    std::vector<uint64_t> keys;
    for (uint32_t cur = 0; cur < sets.size() && !state_budget_hit; ++cur) {
      const VertexSet s = sets[cur];  // copy: sets may reallocate
      bool immediate = false;
      for (SubsetIter it(g.n(), k); it.valid() && !immediate; it.advance()) {
        if (fill_keys(s, it.comb, keys)) {
          immediate = true;
          bound[cur] = 1;
          immediate_move[cur] = VertexSet(it.comb.begin(), it.comb.end());
          break;
        }
        each_open_cell(s, keys, [&](const VertexSet& cell) {
          if (state_budget_hit) return;
          intern(expand(g, cell));
        });
      }
    }
  }

  // One value-iteration sweep over the undecided states (Jacobi: reads prev,
  // writes next). Returns true when anything changed.
  bool sweep() {
    const size_t n_states = sets.size();
    std::vector<int> next(bound);
    std::atomic<bool> changed{false};

    auto work = [&](size_t lo, size_t hi) {
      std::vector<uint64_t> keys;
      VertexSet scratch;
      for (size_t si = lo; si < hi; ++si) {
        if (bound[si] != kInf) continue;
        const VertexSet& s = sets[si];
        int best = kInf;
        for (SubsetIter it(g.n(), k); it.valid(); it.advance()) {
          bool all_singleton = fill_keys(s, it.comb, keys);
          if (all_singleton) { best = 0; break; }  // cannot happen for undecided states
          int worst = 0;
          each_open_cell(s, keys, [&](const VertexSet& cell) {
            if (worst >= kInf) return;
            scratch = expand(g, cell);
            auto found = ids.find(scratch);
            if (found == ids.end()) { worst = kInf; return; }
            worst = std::max(worst, bound[found->second]);
          });
          best = std::min(best, worst);
          if (best <= 1) break;  // 1 + 1 is the floor for a non-immediate state
        }
        if (best < kInf && 1 + best < next[si]) {
          next[si] = 1 + best;
          changed.store(true, std::memory_order_relaxed);
        }
      }
    };

    if (threads <= 1) {
      work(0, n_states);
    } else {
      std::vector<std::thread> pool;
      size_t chunk = (n_states + threads - 1) / threads;
      for (int t = 0; t < threads; ++t) {
        size_t lo = std::min(n_states, t * chunk);
        size_t hi = std::min(n_states, (t + 1) * chunk);
        if (lo < hi) pool.emplace_back(work, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    bound.swap(next);
    return changed.load();
  }

  // First placement (lexicographic) whose worst class already wins within
  // bound-1; exists for every decided state.
  Placement winning_move(uint32_t si) const {
    const VertexSet& s = sets[si];
    if (bound[si] == 1) return immediate_move[si];
    std::vector<uint64_t> keys;
    VertexSet scratch;
    for (SubsetIter it(g.n(), k); it.valid(); it.advance()) {
      if (fill_keys(s, it.comb, keys)) continue;
      int worst = 0;
      each_open_cell(s, keys, [&](const VertexSet& cell) {
        if (worst >= kInf) return;
        scratch = expand(g, cell);
        auto found = ids.find(scratch);
        worst = found == ids.end() ? kInf : std::max(worst, bound[found->second]);
      });
      if (worst < kInf && 1 + worst == bound[si])
        return Placement(it.comb.begin(), it.comb.end());
    }
    throw Error(Errc::internal, "decided state without a witnessing placement");
  }
};

}  // namespace

SolveResult can_win(const Graph& g, int k, const Budgets& budgets, int threads,
                    const std::string& graph_id) {
  if (!g.connected()) throw Error(Errc::disconnected_graph, "solver needs a connected graph");
  if (k < 1) throw Error(Errc::not_applicable, "needs k >= 1");
  if (k > kMaxProbes)
    throw Error(Errc::not_applicable, "solver supports at most 8 cops");

  Solver solver(g, k, budgets, threads);
  solver.reach();

  SolveResult result;
  result.graph_id = graph_id;
  result.k = k;
  result.states = static_cast<long long>(solver.sets.size());
  if (solver.state_budget_hit) {
    result.status = SolveStatus::unknown;
    result.note = "state budget exhausted";
    return result;
  }

  while (solver.sweep()) {
  }

  int root_bound = solver.bound[0];
  if (root_bound <= solver.budgets.max_rounds) {
    result.status = SolveStatus::cops_win;
    result.round_bound = root_bound;

    Certificate cert;
    cert.kind = Certificate::Kind::cops;
    cert.k = k;
    cert.round_bound = root_bound;
    cert.graph_id = graph_id;
    // closure of certificate play from the initial state
    std::vector<char> visited(solver.sets.size(), 0);
    std::vector<uint32_t> stack{0};
    visited[0] = 1;
    std::vector<uint64_t> keys;
    while (!stack.empty()) {
      uint32_t si = stack.back();
      stack.pop_back();
      Placement move = solver.winning_move(si);
      cert.cop_moves.emplace_back(solver.sets[si], move);
      solver.fill_keys(solver.sets[si], move, keys);
      solver.each_open_cell(solver.sets[si], keys, [&](const VertexSet& cell) {
        VertexSet nxt = expand(g, cell);
        auto it = solver.ids.find(nxt);
        if (it == solver.ids.end()) throw Error(Errc::internal, "certificate successor missing");
        if (!visited[it->second]) {
          visited[it->second] = 1;
          stack.push_back(it->second);
        }
      });
    }
    std::sort(cert.cop_moves.begin(), cert.cop_moves.end());
    result.certificate = std::move(cert);
  } else if (root_bound >= kInf) {
    result.status = SolveStatus::robber_wins;

    Certificate cert;
    cert.kind = Certificate::Kind::robber;
    cert.k = k;
    cert.graph_id = graph_id;
    for (size_t si = 0; si < solver.sets.size(); ++si)
      if (solver.bound[si] >= kInf) cert.robber_states.push_back(solver.sets[si]);
    std::sort(cert.robber_states.begin(), cert.robber_states.end());
    result.certificate = std::move(cert);
  } else {
    result.status = SolveStatus::unknown;
    result.note = "capture bound " + std::to_string(root_bound) + " exceeds the round budget";
  }
  return result;
}

std::string LocalizationResult::str() const {
  if (exact && hi) return std::to_string(*hi);
  std::string top = hi ? std::to_string(*hi) : "?";
  return "[" + std::to_string(lo) + "," + top + "]";
}

LocalizationResult localization_number(const Graph& g, int k_max, const Budgets& budgets,
                                       int threads, const std::string& graph_id) {
  LocalizationResult out;
  bool clean = true;
  for (int k = 1; k <= k_max; ++k) {
    SolveResult r = can_win(g, k, budgets, threads, graph_id);
    out.runs.push_back(r);
    if (r.status == SolveStatus::robber_wins) {
      out.lo = k + 1;
    } else if (r.status == SolveStatus::cops_win) {
      out.hi = k;
      out.exact = clean && out.lo == k;
      break;
    } else {
      clean = false;
    }
  }
  if (!out.hi && out.lo > k_max) out.exact = true;  // all k failed; value exceeds k_max
  return out;
}

Certificate extract_certificate(const SolveResult& r) {
  if (r.status == SolveStatus::unknown || !r.certificate)
    throw Error(Errc::budget_exhausted, "no certificate for an undecided run");
  return *r.certificate;
}

CertificateCopStrategy::CertificateCopStrategy(const Certificate& cert)
    : k_(cert.k), moves_(cert.cop_moves) {
  if (cert.kind != Certificate::Kind::cops)
    throw Error(Errc::not_applicable, "not a cops certificate");
  std::sort(moves_.begin(), moves_.end());
}

Placement CertificateCopStrategy::next_placement(const Graph& g, const GameTranscript& t) const {
  VertexSet territory = t.rounds.empty() ? t.initial : expand(g, t.rounds.back().cell);
  auto it = std::lower_bound(moves_.begin(), moves_.end(), territory,
                             [](const auto& entry, const VertexSet& key) { return entry.first < key; });
  if (it == moves_.end() || it->first != territory)
    throw Error(Errc::internal, "certificate has no move for the current candidate set");
  return it->second;
}

CertificateRobber::CertificateRobber(const Certificate& cert) : states_(cert.robber_states) {
  if (cert.kind != Certificate::Kind::robber)
    throw Error(Errc::not_applicable, "not a robber certificate");
  std::sort(states_.begin(), states_.end());
}

size_t CertificateRobber::choose_class(const Graph& g, const std::vector<VertexSet>& cells) {
  for (size_t i = 0; i < cells.size(); ++i) {
    VertexSet nxt = expand(g, cells[i]);
    if (std::binary_search(states_.begin(), states_.end(), nxt)) return i;
  }
  ++violations_;
  return 0;
}

Verdict replay_cops_certificate(const Graph& g, const Certificate& cert, int round_budget,
                                int threads) {
  CertificateCopStrategy strat(cert);
  if (round_budget <= 0) round_budget = std::max(default_round_budget(g), cert.round_bound + 1);
  return verify_strategy_exhaustive(g, strat, round_budget, threads);
}

bool replay_robber_certificate(const Graph& g, const Certificate& cert) {
  if (cert.kind != Certificate::Kind::robber) return false;
  const auto& states = cert.robber_states;
  if (!std::binary_search(states.begin(), states.end(), g.all_vertices())) return false;
  for (const auto& s : states) {
    for (SubsetIter it(g.n(), cert.k); it.valid(); it.advance()) {
      Placement p(it.comb.begin(), it.comb.end());
      bool survivable = false;
      for (const auto& cell : partition_by_probe(g, s, p)) {
        if (cell.size() < 2) continue;
        VertexSet nxt = expand(g, cell);
        if (std::binary_search(states.begin(), states.end(), nxt)) { survivable = true; break; }
      }
      if (!survivable) return false;
    }
  }
  return true;
}

}  // namespace locgame
