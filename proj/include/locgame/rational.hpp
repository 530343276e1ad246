#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace locgame {

/// Exact rational on 64-bit components, normalized with positive denominator.
/// Big enough for the admissibility ratios used here; overflow throws.
class Rational {
 public:
  Rational() = default;
  Rational(long long num, long long den = 1) : n_(num), d_(den) { normalize(); }

  long long num() const { return n_; }
  long long den() const { return d_; }
  bool integral() const { return d_ == 1; }

  bool operator==(const Rational& o) const { return n_ == o.n_ && d_ == o.d_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }

  std::string str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

  static Rational binomial_ratio(long long an, long long ak, long long bn, long long bk) {
    // C(an, ak) / C(bn, bk) with intermediate reduction.
    __int128 num = 1, den = 1;
    auto reduce = [&]() {
      __int128 g = gcd128(num < 0 ? -num : num, den < 0 ? -den : den);
      if (g > 1) { num /= g; den /= g; }
    };
    for (long long i = 0; i < ak; ++i) {
      num *= (an - i);
      den *= (i + 1);
      reduce();
      check(num); check(den);
    }
    for (long long i = 0; i < bk; ++i) {
      den *= (bn - i);
      num *= (i + 1);
      reduce();
      check(num); check(den);
    }
    return Rational(static_cast<long long>(num), static_cast<long long>(den));
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a < 0 ? -a : a;
  }

  static void check(__int128 x) {
    if (x > INT64_MAX || x < -static_cast<__int128>(INT64_MAX))
      throw std::overflow_error("Rational overflow");
  }

  void normalize() {
    if (d_ == 0) throw std::domain_error("Rational with zero denominator");
    if (d_ < 0) { n_ = -n_; d_ = -d_; }
    long long g = std::gcd(n_ < 0 ? -n_ : n_, d_);
    if (g > 1) { n_ /= g; d_ /= g; }
  }

  long long n_ = 0;
  long long d_ = 1;
};

}  // namespace locgame
