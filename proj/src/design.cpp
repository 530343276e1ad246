#include "locgame/design.hpp"

#include <map>

namespace locgame {

std::string DesignParams::str() const {
  return "BIBD(" + std::to_string(v) + "," + std::to_string(b) + "," + std::to_string(r) +
         "," + std::to_string(k) + "," + std::to_string(lambda) + ")";
}

void normalize_design(Design& d) {
  for (auto& blk : d.blocks) std::sort(blk.begin(), blk.end());
}

void check_design_shape(const Design& d) {
  if (d.v < 0) throw Error(Errc::bad_format, "negative point count");
  for (int bi = 0; bi < d.b(); ++bi) {
    const auto& blk = d.blocks[bi];
    for (size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= d.v)
        throw Error(Errc::bad_format,
                    "block " + std::to_string(bi) + " has out-of-range point " +
                        std::to_string(blk[i]));
      if (i > 0 && blk[i] == blk[i - 1])
        throw Error(Errc::bad_format,
                    "block " + std::to_string(bi) + " repeats point " + std::to_string(blk[i]),
                    {bi, blk[i]});
      if (i > 0 && blk[i] < blk[i - 1])
        throw Error(Errc::bad_format, "block " + std::to_string(bi) + " is not sorted");
    }
  }
}

DesignParams validate_bibd(const Design& d) {
  if (d.v == 0 || d.blocks.empty()) throw Error(Errc::empty_design, "design has no points or no blocks");
  check_design_shape(d);

  const int k = static_cast<int>(d.blocks.front().size());
  for (int bi = 0; bi < d.b(); ++bi) {
    if (static_cast<int>(d.blocks[bi].size()) != k)
      throw Error(Errc::not_uniform,
                  "block " + std::to_string(bi) + " has size " +
                      std::to_string(d.blocks[bi].size()) + ", expected " + std::to_string(k),
                  {bi});
  }

  // Pair counts; lambda is the most frequent count (ties -> smaller value).
  std::vector<int> pair_count(static_cast<size_t>(d.v) * d.v, 0);
  for (const auto& blk : d.blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        ++pair_count[static_cast<size_t>(blk[i]) * d.v + blk[j]];

  std::map<int, long long> freq;
  for (int i = 0; i < d.v; ++i)
    for (int j = i + 1; j < d.v; ++j) ++freq[pair_count[static_cast<size_t>(i) * d.v + j]];
  int lambda = 0;
  long long best = -1;
  for (auto [cnt, f] : freq) {
    if (f > best) { best = f; lambda = cnt; }
  }
  for (int i = 0; i < d.v; ++i)
    for (int j = i + 1; j < d.v; ++j) {
      int c = pair_count[static_cast<size_t>(i) * d.v + j];
      if (c != lambda)
        throw Error(Errc::pair_count_violation,
                    "pair {" + std::to_string(i) + "," + std::to_string(j) + "} lies in " +
                        std::to_string(c) + " blocks, expected " + std::to_string(lambda),
                    {i, j, c, lambda});
    }

  std::vector<int> deg(d.v, 0);
  for (const auto& blk : d.blocks)
    for (int p : blk) ++deg[p];
  for (int p = 1; p < d.v; ++p) {
    if (deg[p] != deg[0])
      throw Error(Errc::pair_count_violation,
                  "point " + std::to_string(p) + " has replication " + std::to_string(deg[p]) +
                      " but point 0 has " + std::to_string(deg[0]),
                  {p, deg[p], deg[0]});
  }

  DesignParams params;
  params.v = d.v;
  params.b = d.b();
  params.r = deg[0];
  params.k = k;
  params.lambda = lambda;
  params.symmetric = (params.v == params.b);
  params.simple = true;
  for (size_t i = 0; i + 1 < d.blocks.size() && params.simple; ++i) {
    for (size_t j = i + 1; j < d.blocks.size(); ++j) {
      if (d.blocks[i] == d.blocks[j]) { params.simple = false; break; }
    }
  }
  return params;
}

namespace {

// Lexicographic enumeration of t-subsets, stopping at the first offender.
bool next_combination(std::vector<int>& c, int n) {
  int t = static_cast<int>(c.size());
  for (int i = t - 1; i >= 0; --i) {
    if (c[i] < n - (t - i)) {
      ++c[i];
      for (int j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

SteinerCheck validate_steiner(const Design& d, int t) {
  if (d.blocks.empty()) throw Error(Errc::empty_design, "design has no blocks");
  const int k = static_cast<int>(d.blocks.front().size());
  if (!(2 <= t && t <= k && k < d.v))
    throw Error(Errc::not_applicable, "need 2 <= t <= block size < v");
  check_design_shape(d);

  std::vector<int> sub(t);
  for (int i = 0; i < t; ++i) sub[i] = i;
  do {
    int cnt = 0;
    for (const auto& blk : d.blocks) {
      if (std::includes(blk.begin(), blk.end(), sub.begin(), sub.end())) ++cnt;
    }
    if (cnt != 1) return SteinerCheck{false, sub, cnt};
  } while (next_combination(sub, d.v));
  return SteinerCheck{};
}

Rational repetition_number(int t, int k, int v) {
  if (!(t < k && k < v)) throw Error(Errc::not_applicable, "need t < k < v");
  return Rational::binomial_ratio(v - 1, t - 1, k - 1, t - 1);
}

}  // namespace locgame
