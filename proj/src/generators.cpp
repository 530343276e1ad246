#include "locgame/generators.hpp"

#include <map>
#include <numeric>

namespace locgame {

FiniteField finite_field(int q) { return FiniteField(q); }

Design projective_plane(int q) {
  FiniteField f(q);

  // Normalized homogeneous triples: first nonzero coordinate is 1. Generated
  // in lexicographic order, which fixes the point numbering.
  std::vector<std::array<int, 3>> reps;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) {
        std::array<int, 3> t{a, b, c};
        int lead = t[0] != 0 ? t[0] : (t[1] != 0 ? t[1] : t[2]);
        if (lead != 1) continue;
        if (a == 0 && b == 0 && c == 0) continue;
        reps.push_back(t);
      }

  Design d;
  d.v = static_cast<int>(reps.size());
  for (const auto& line : reps) {  // dual coordinates enumerate the blocks
    VertexSet blk;
    for (int p = 0; p < d.v; ++p) {
      const auto& pt = reps[p];
      int s = f.add(f.add(f.mul(line[0], pt[0]), f.mul(line[1], pt[1])), f.mul(line[2], pt[2]));
      if (s == 0) blk.push_back(p);
    }
    d.blocks.push_back(blk);
  }
  return d;
}

ResolvedDesign affine_plane(int q) {
  FiniteField f(q);
  ResolvedDesign rd;
  rd.design.v = q * q;  // point (x, y) -> x*q + y

  // Slope classes first (m = 0..q-1), the vertical class last.
  for (int m = 0; m < q; ++m) {
    std::vector<int> cls;
    for (int c = 0; c < q; ++c) {
      VertexSet blk;
      for (int x = 0; x < q; ++x) {
        int y = f.add(f.mul(m, x), c);
        blk.push_back(x * q + y);
      }
      sort_unique(blk);
      cls.push_back(rd.design.b());
      rd.design.blocks.push_back(blk);
    }
    rd.classes.push_back(cls);
  }
  std::vector<int> vertical;
  for (int c = 0; c < q; ++c) {
    VertexSet blk;
    for (int y = 0; y < q; ++y) blk.push_back(c * q + y);
    vertical.push_back(rd.design.b());
    rd.design.blocks.push_back(blk);
  }
  rd.classes.push_back(vertical);
  return rd;
}

namespace {

Design sts_bose(int t) {
  // Points (x, i) for x in Z_{2t+1}, i in {0,1,2}, numbered 3x + i.
  const int m = 2 * t + 1;
  const int half = t + 1;  // inverse of 2 mod 2t+1
  Design d;
  d.v = 3 * m;
  auto pt = [](int x, int i) { return 3 * x + i; };
  for (int x = 0; x < m; ++x)
    d.blocks.push_back(VertexSet{pt(x, 0), pt(x, 1), pt(x, 2)});  // parallel class first
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        int z = static_cast<int>((static_cast<long long>(x + y) * half) % m);
        VertexSet blk{pt(x, i), pt(y, i), pt(z, (i + 1) % 3)};
        sort_unique(blk);
        d.blocks.push_back(blk);
      }
  return d;
}

Design sts_skolem(int t) {
  // Points (x, i) for x in Z_{2t}, i in {0,1,2}, numbered 3x + i; the extra
  // point is last. Built on the half-idempotent commutative quasigroup
  // x*y = h(x+y mod 2t) with h(2m) = m, h(2m+1) = m + t.
  const int m = 2 * t;
  Design d;
  d.v = 3 * m + 1;
  const int infinity = d.v - 1;
  auto pt = [](int x, int i) { return 3 * x + i; };
  auto h = [&](int s) { return (s % 2 == 0) ? s / 2 : (s - 1) / 2 + t; };
  auto qg = [&](int x, int y) { return h((x + y) % m); };

  for (int x = 0; x < t; ++x)
    d.blocks.push_back(VertexSet{pt(x, 0), pt(x, 1), pt(x, 2)});
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < t; ++x) {
      VertexSet blk{infinity, pt(t + x, i), pt(x, (i + 1) % 3)};
      sort_unique(blk);
      d.blocks.push_back(blk);
    }
  for (int i = 0; i < 3; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y) {
        VertexSet blk{pt(x, i), pt(y, i), pt(qg(x, y), (i + 1) % 3)};
        sort_unique(blk);
        d.blocks.push_back(blk);
      }
  return d;
}

}  // namespace

Design sts(int v) {
  if (v < 7) throw Error(Errc::invalid_order, "STS needs v >= 7");
  if (v % 6 == 3) return sts_bose((v - 3) / 6);
  if (v % 6 == 1) return sts_skolem((v - 1) / 6);
  throw Error(Errc::invalid_order, "STS order must be 1 or 3 mod 6, got " + std::to_string(v));
}

Design sqs_boolean(int e) {
  if (e < 3) throw Error(Errc::invalid_order, "boolean SQS needs e >= 3");
  Design d;
  d.v = 1 << e;
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b)
      for (int c = b + 1; c < d.v; ++c) {
        int x = a ^ b ^ c;
        if (x > c) d.blocks.push_back(VertexSet{a, b, c, x});
      }
  return d;
}

GroupedDesign transversal_design(int k, int n) {
  if (k < 3) throw Error(Errc::invalid_order, "TD needs k >= 3");
  if (k > n + 1) throw Error(Errc::k_too_large, "TD(k,n) needs k <= n+1");
  FiniteField f(n);

  GroupedDesign gd;
  gd.design.v = k * n;
  for (int gi = 0; gi < k; ++gi) {
    VertexSet grp;
    for (int a = 0; a < n; ++a) grp.push_back(gi * n + a);
    gd.groups.push_back(grp);
  }
  // Block (a, b): group 0 holds a, group 1 holds b, group m+2 holds
  // a + e_m * b with distinct nonzero multipliers e_m.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      VertexSet blk{a, n + b};
      for (int mslot = 0; mslot + 2 < k; ++mslot) {
        int e = mslot + 1;  // nonzero elements 1..k-2
        blk.push_back((mslot + 2) * n + f.add(a, f.mul(e, b)));
      }
      sort_unique(blk);
      gd.design.blocks.push_back(blk);
    }
  return gd;
}

void check_resolution(const ResolvedDesign& rd) {
  std::vector<int> seen(rd.design.b(), 0);
  for (const auto& cls : rd.classes) {
    std::vector<int> cover(rd.design.v, 0);
    for (int bi : cls) {
      if (bi < 0 || bi >= rd.design.b()) throw Error(Errc::not_resolved, "class indexes a missing block");
      ++seen[bi];
      for (int p : rd.design.blocks[bi]) ++cover[p];
    }
    for (int p = 0; p < rd.design.v; ++p)
      if (cover[p] != 1)
        throw Error(Errc::not_resolved,
                    "class does not partition the points (point " + std::to_string(p) + ")");
  }
  for (int bi = 0; bi < rd.design.b(); ++bi)
    if (seen[bi] != 1) throw Error(Errc::not_resolved, "blocks are not partitioned into classes");
}

void check_transversal(const GroupedDesign& gd) {
  const int v = gd.design.v;
  std::vector<int> group_of(v, -1);
  for (size_t gi = 0; gi < gd.groups.size(); ++gi)
    for (int p : gd.groups[gi]) {
      if (p < 0 || p >= v || group_of[p] != -1)
        throw Error(Errc::not_resolved, "groups do not partition the points");
      group_of[p] = static_cast<int>(gi);
    }
  for (int p = 0; p < v; ++p)
    if (group_of[p] < 0) throw Error(Errc::not_resolved, "point missing from every group");
  const size_t k = gd.groups.size();
  if (!gd.groups.empty()) {
    size_t n = gd.groups.front().size();
    for (const auto& g : gd.groups)
      if (g.size() != n) throw Error(Errc::not_resolved, "groups differ in size");
  }
  for (const auto& blk : gd.design.blocks) {
    if (blk.size() != k) throw Error(Errc::not_resolved, "block size differs from group count");
    std::vector<int> hit(k, 0);
    for (int p : blk) ++hit[group_of[p]];
    for (size_t gi = 0; gi < k; ++gi)
      if (hit[gi] != 1) throw Error(Errc::not_resolved, "block misses or doubles a group");
  }
  // Every cross-group pair in exactly one block.
  std::map<std::pair<int, int>, int> cross;
  for (const auto& blk : gd.design.blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j) ++cross[{blk[i], blk[j]}];
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y) {
      int expect = group_of[x] == group_of[y] ? 0 : 1;
      auto it = cross.find({x, y});
      int got = it == cross.end() ? 0 : it->second;
      if (got != expect)
        throw Error(Errc::not_resolved, "cross-group pair count violated at {" +
                                            std::to_string(x) + "," + std::to_string(y) + "}");
    }
}

GroupedDesign derive_td_from_pp(const Design& pp, int point) {
  DesignParams params;
  try {
    params = validate_bibd(pp);
  } catch (const Error&) {
    throw Error(Errc::not_a_plane, "input fails the design axioms");
  }
  int q = params.k - 1;
  if (!(params.symmetric && params.lambda == 1 && params.v == q * q + q + 1 && q >= 2))
    throw Error(Errc::not_a_plane, "parameters are not those of a projective plane");
  if (point < 0 || point >= pp.v) throw Error(Errc::not_a_plane, "point index out of range");

  // Points other than `point` are renumbered by the block of `point` they lie
  // on: group g position a -> g*q + a, groups ordered by deleted-block index.
  std::vector<int> removed_blocks;
  for (int bi = 0; bi < pp.b(); ++bi)
    if (set_contains(pp.blocks[bi], point)) removed_blocks.push_back(bi);

  std::vector<int> new_id(pp.v, -1);
  GroupedDesign gd;
  gd.design.v = (q + 1) * q;
  int next = 0;
  for (int bi : removed_blocks) {
    VertexSet grp;
    for (int p : pp.blocks[bi])
      if (p != point) {
        new_id[p] = next;
        grp.push_back(next);
        ++next;
      }
    gd.groups.push_back(grp);
  }
  for (int bi = 0; bi < pp.b(); ++bi) {
    if (set_contains(pp.blocks[bi], point)) continue;
    VertexSet blk;
    for (int p : pp.blocks[bi]) blk.push_back(new_id[p]);
    sort_unique(blk);
    gd.design.blocks.push_back(blk);
  }
  return gd;
}

GroupedDesign derive_td_from_affine(const ResolvedDesign& ap, int cls) {
  check_resolution(ap);
  if (cls < 0 || cls >= static_cast<int>(ap.classes.size()))
    throw Error(Errc::not_resolved, "class index out of range");

  GroupedDesign gd;
  gd.design.v = ap.design.v;
  for (int bi : ap.classes[cls]) gd.groups.push_back(ap.design.blocks[bi]);
  std::vector<char> removed(ap.design.b(), 0);
  for (int bi : ap.classes[cls]) removed[bi] = 1;
  for (int bi = 0; bi < ap.design.b(); ++bi)
    if (!removed[bi]) gd.design.blocks.push_back(ap.design.blocks[bi]);
  return gd;
}

std::optional<ResolvedDesign> recover_resolution(const Design& d) {
  // Components of block-disjointness; valid iff each component is a parallel
  // class. Works for affine planes, where parallelism is an equivalence.
  const int b = d.b();
  std::vector<int> comp(b, -1);
  int nc = 0;
  for (int s = 0; s < b; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = nc;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < b; ++w)
        if (comp[w] < 0 && sets_disjoint(d.blocks[u], d.blocks[w])) {
          comp[w] = nc;
          stack.push_back(w);
        }
    }
    ++nc;
  }
  ResolvedDesign rd;
  rd.design = d;
  rd.classes.assign(nc, {});
  for (int bi = 0; bi < b; ++bi) rd.classes[comp[bi]].push_back(bi);
  try {
    check_resolution(rd);
  } catch (const Error&) {
    return std::nullopt;
  }
  return rd;
}

std::optional<GroupedDesign> recover_grouping(const Design& d) {
  // Groups are the classes of "never share a block".
  const int v = d.v;
  std::vector<char> together(static_cast<size_t>(v) * v, 0);
  for (const auto& blk : d.blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = 0; j < blk.size(); ++j)
        if (i != j) together[static_cast<size_t>(blk[i]) * v + blk[j]] = 1;

  std::vector<int> grp(v, -1);
  int ng = 0;
  for (int s = 0; s < v; ++s) {
    if (grp[s] >= 0) continue;
    grp[s] = ng;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < v; ++w)
        if (grp[w] < 0 && !together[static_cast<size_t>(u) * v + w] && w != u) {
          grp[w] = ng;
          stack.push_back(w);
        }
    }
    ++ng;
  }
  GroupedDesign gd;
  gd.design = d;
  gd.groups.assign(ng, {});
  for (int p = 0; p < v; ++p) gd.groups[grp[p]].push_back(p);
  try {
    check_transversal(gd);
  } catch (const Error&) {
    return std::nullopt;
  }
  return gd;
}

}  // namespace locgame
