#pragma once

#include "locgame/design.hpp"

namespace locgame::testing {

// Fano plane: the canonical STS(7).
inline Design fano() {
  Design d;
  d.v = 7;
  d.blocks = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};
  return d;
}

// The two non-isomorphic BIBD(7,21,9,3,3): the first is the Fano plane with
// every block tripled, the second retriples differently.
inline Design triple_system_a() {
  Design d;
  d.v = 7;
  for (const auto& blk : fano().blocks)
    for (int rep = 0; rep < 3; ++rep) d.blocks.push_back(blk);
  return d;
}

inline Design triple_system_b() {
  Design d;
  d.v = 7;
  d.blocks = {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 3, 4}, {0, 3, 4}, {0, 3, 4},
              {0, 5, 6}, {0, 5, 6}, {0, 5, 6}, {1, 3, 5}, {1, 3, 5}, {1, 3, 6},
              {1, 4, 5}, {1, 4, 6}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 3, 6},
              {2, 4, 5}, {2, 4, 5}, {2, 4, 6}};
  return d;
}

// Quadratic-residue biplane: the 2-(11,5,2) design of block {1,3,4,5,9} translates.
inline Design biplane11() {
  Design d;
  d.v = 11;
  for (int shift = 0; shift < 11; ++shift) {
    VertexSet blk;
    for (int base : {1, 3, 4, 5, 9}) blk.push_back((base + shift) % 11);
    std::sort(blk.begin(), blk.end());
    d.blocks.push_back(blk);
  }
  return d;
}

}  // namespace locgame::testing
