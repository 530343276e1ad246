#pragma once

#include <vector>

#include "locgame/common.hpp"

namespace locgame {

/// GF(q) with full arithmetic tables. q is a prime, or one of the prime
/// powers {4,8,9,16,25,27} backed by a fixed table of irreducible
/// polynomials (reproducible element numbering, no runtime polynomial
/// search). Elements are 0..q-1; element 1 is the multiplicative identity.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int q() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return e_; }

  int add(int a, int b) const { return add_[a * q_ + b]; }
  int sub(int a, int b) const { return add(a, neg_[b]); }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const;
  int div(int a, int b) const { return mul(a, inv(b)); }

 private:
  int q_ = 0, p_ = 0, e_ = 1;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace locgame
