#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace locgame {

using Vertex = int;

/// Sorted, duplicate-free vertex list. All set-valued state (blocks, candidate
/// sets, placements) uses this canonical form so comparisons and serialization
/// are deterministic.
using VertexSet = std::vector<Vertex>;

inline void sort_unique(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool set_contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool sets_disjoint(const VertexSet& a, const VertexSet& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

enum class Errc {
  empty_design,
  not_uniform,
  pair_count_violation,
  disconnected_graph,
  unsupported_order,
  invalid_order,
  k_too_large,
  not_a_plane,
  not_resolved,
  not_applicable,
  not_delayed_resolving,
  budget_exhausted,
  bad_format,
  internal,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::empty_design: return "EmptyDesign";
    case Errc::not_uniform: return "NotUniform";
    case Errc::pair_count_violation: return "PairCountViolation";
    case Errc::disconnected_graph: return "DisconnectedGraph";
    case Errc::unsupported_order: return "UnsupportedOrder";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::k_too_large: return "KTooLarge";
    case Errc::not_a_plane: return "NotAPlane";
    case Errc::not_resolved: return "NotResolved";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::not_delayed_resolving: return "NotDelayedResolving";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::bad_format: return "BadFormat";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

/// Library error. `args()` carries small integer payloads such as the
/// offending point pair of a PairCountViolation.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, std::vector<long long> args = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        args_(std::move(args)) {}

  Errc code() const { return code_; }
  const std::vector<long long>& args() const { return args_; }

 private:
  Errc code_;
  std::vector<long long> args_;
};

}  // namespace locgame
