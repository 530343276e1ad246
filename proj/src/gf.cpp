#include "locgame/gf.hpp"

namespace locgame {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible polynomials, coefficient of x^i at entry i, monic leading term
// implied. Fixed table so element numbering never changes.
struct ExtSpec {
  int q, p, e;
  std::vector<int> poly;  // x^e = -(poly), i.e. reduction rule coefficients
};

const ExtSpec* lookup_ext(int q) {
  // x^2+x+1 over GF(2); x^3+x+1 over GF(2); x^2+1 over GF(3);
  // x^4+x+1 over GF(2); x^2+2 over GF(5); x^3+2x+1 over GF(3).
  static const std::vector<ExtSpec> table = {
      {4, 2, 2, {1, 1}},  {8, 2, 3, {1, 1, 0}},   {9, 3, 2, {1, 0}},
      {16, 2, 4, {1, 1, 0, 0}}, {25, 5, 2, {2, 0}}, {27, 3, 3, {1, 2, 0}},
  };
  for (const auto& spec : table)
    if (spec.q == q) return &spec;
  return nullptr;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  const ExtSpec* ext = nullptr;
  if (is_prime(q)) {
    p_ = q;
    e_ = 1;
  } else if ((ext = lookup_ext(q)) != nullptr) {
    p_ = ext->p;
    e_ = ext->e;
  } else {
    throw Error(Errc::unsupported_order,
                "GF(" + std::to_string(q) + ") is not prime and not in the built-in table");
  }

  add_.assign(q * q, 0);
  mul_.assign(q * q, 0);
  neg_.assign(q, 0);
  inv_.assign(q, -1);

  if (e_ == 1) {
    for (int a = 0; a < q; ++a) {
      neg_[a] = (q - a) % q;
      for (int b = 0; b < q; ++b) {
        add_[a * q + b] = (a + b) % q;
        mul_[a * q + b] = (a * b) % q;
      }
    }
  } else {
    // Elements are base-p digit vectors packed as integers, digit i = x^i.
    auto digits = [&](int a) {
      std::vector<int> d(e_);
      for (int i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
      return d;
    };
    auto pack = [&](const std::vector<int>& d) {
      int a = 0;
      for (int i = e_ - 1; i >= 0; --i) a = a * p_ + d[i];
      return a;
    };
    for (int a = 0; a < q; ++a) {
      auto da = digits(a);
      std::vector<int> dn(e_);
      for (int i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_[a] = pack(dn);
      for (int b = 0; b < q; ++b) {
        auto db = digits(b);
        std::vector<int> ds(e_);
        for (int i = 0; i < e_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_[a * q + b] = pack(ds);

        // Polynomial product then reduction by x^e = -poly.
        std::vector<int> prod(2 * e_ - 1, 0);
        for (int i = 0; i < e_; ++i)
          for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (int d = 2 * e_ - 2; d >= e_; --d) {
          int c = prod[d];
          if (c == 0) continue;
          prod[d] = 0;
          for (int i = 0; i < e_; ++i)
            prod[d - e_ + i] = (prod[d - e_ + i] + c * (p_ - ext->poly[i])) % p_;
        }
        prod.resize(e_);
        mul_[a * q + b] = pack(prod);
      }
    }
  }

  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (mul_[a * q + b] == 1) inv_[a] = b;
  for (int a = 1; a < q; ++a)
    if (inv_[a] < 0) throw Error(Errc::internal, "field table has a non-invertible element");
}

int FiniteField::inv(int a) const {
  if (a == 0) throw Error(Errc::internal, "division by zero in GF");
  return inv_[a];
}

}  // namespace locgame
