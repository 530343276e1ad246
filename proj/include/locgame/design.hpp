#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locgame/common.hpp"
#include "locgame/rational.hpp"

namespace locgame {

/// A design: v points labelled 0..v-1 and an ordered list of blocks. Repeated
/// blocks are allowed and kept; block order is preserved so blocks are
/// addressable by index.
struct Design {
  int v = 0;
  std::vector<VertexSet> blocks;

  int b() const { return static_cast<int>(blocks.size()); }
};

/// Parameter tuple of a balanced design. vr = bk and lambda(v-1) = r(k-1)
/// hold by counting; for a proper design (v > k) Fisher's inequality forces
/// b >= v and hence r >= k, which is the orientation used throughout.
struct DesignParams {
  int v = 0;
  int b = 0;
  int r = 0;
  int k = 0;
  int lambda = 0;
  bool symmetric = false;  // v = b, in which case r = k
  bool simple = false;     // no repeated blocks

  std::string str() const;
};

/// Shape check: every block a duplicate-free subset of [0, v). Throws on
/// violation. Blocks are expected sorted; call normalize_design first when
/// reading untrusted input.
void check_design_shape(const Design& d);

/// Sorts every block's points in place.
void normalize_design(Design& d);

/// Checks the balanced-incomplete-block axioms and returns the parameter
/// tuple. lambda is inferred as the most frequent pair count; the first pair
/// (lexicographically) whose count differs raises PairCountViolation with the
/// pair and both counts attached. Uniform block size is required (NotUniform).
DesignParams validate_bibd(const Design& d);

struct SteinerCheck {
  bool ok = true;
  std::vector<int> violating_subset;  // first offender in lexicographic order
  int count = 0;                      // how many blocks contain it

  explicit operator bool() const { return ok; }
};

/// True iff every t-subset of points lies in exactly one block.
SteinerCheck validate_steiner(const Design& d, int t);

/// C(v-1, t-1) / C(k-1, t-1): the number of blocks through a point of an
/// S(t,k,v) when one exists. Non-integral values witness inadmissibility.
Rational repetition_number(int t, int k, int v);

}  // namespace locgame
