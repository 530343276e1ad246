#pragma once

#include <vector>

#include "locgame/design.hpp"
#include "locgame/gf.hpp"

namespace locgame {

/// Design whose blocks resolve into parallel classes: each class is a set of
/// pairwise disjoint blocks covering every point.
struct ResolvedDesign {
  Design design;
  std::vector<std::vector<int>> classes;  // block indices per class
};

/// Transversal design: kn points in k groups of size n; every block meets
///每 group exactly once.
struct GroupedDesign {
  Design design;
  std::vector<VertexSet> groups;  // point indices per group
};

FiniteField finite_field(int q);

/// PG(2,q): points are the 1-dim subspaces of GF(q)^3 (lexicographically
/// smallest normalized representative fixes the numbering), blocks the 2-dim
/// subspaces. Yields the symmetric (q^2+q+1, q^2+q+1, q+1, q+1, 1) design.
Design projective_plane(int q);

/// AG(2,q): points GF(q)^2 numbered row-major as x*q + y; lines y = m x + c
/// grouped into q slope classes followed by the vertical class.
ResolvedDesign affine_plane(int q);

/// Steiner triple system of order v: Bose construction for v = 3 (mod 6)
/// (points (residue, column) numbered 3x + i, the parallel class
/// {(x,0),(x,1),(x,2)} listed first), Skolem construction for v = 1 (mod 6)
/// (same numbering, the extra point last).
Design sts(int v);

/// Boolean Steiner quadruple system on 2^e points: blocks are the 4-sets of
/// binary e-vectors with coordinatewise XOR zero.
Design sqs_boolean(int e);

/// TD(k,n) from k-2 mutually orthogonal Latin squares over GF(n): point
/// (group g, element a) is numbered g*n + a.
GroupedDesign transversal_design(int k, int n);

/// Deletes one point of a projective plane together with the blocks through
/// it; the deleted blocks' residues become the groups of a TD(q+1, q).
GroupedDesign derive_td_from_pp(const Design& pp, int point);

/// Deletes one parallel class of an affine plane; its blocks become the
/// groups of a TD(q, q).
GroupedDesign derive_td_from_affine(const ResolvedDesign& ap, int cls);

/// Checks the resolution invariant (disjoint classes covering all points).
void check_resolution(const ResolvedDesign& rd);

/// Checks the transversal axioms; throws on violation.
void check_transversal(const GroupedDesign& gd);

/// Recovers parallel classes as connected components of block-disjointness;
/// returns nothing if those components do not form a resolution.
std::optional<ResolvedDesign> recover_resolution(const Design& d);

/// Recovers TD groups as classes of the never-co-occurring relation; returns
/// nothing if the design is not a transversal design.
std::optional<GroupedDesign> recover_grouping(const Design& d);

}  // namespace locgame
