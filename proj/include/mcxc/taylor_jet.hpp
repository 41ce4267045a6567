#pragma once

#include <array>
#include <cmath>

namespace mcxc {

/// Truncated third-order Taylor polynomial in three variables. Scenes are
/// written once in terms of Jet3 and all spatial derivatives up to third
/// order fall out of the arithmetic.
class Jet3 {
 public:
  static constexpr int kTerms = 20;

  constexpr Jet3() = default;
  constexpr Jet3(double value) { c_[0] = value; }  // NOLINT(implicit)

  /// Coordinate variable `axis` expanded about `value`.
  static Jet3 variable(int axis, double value) {
    Jet3 j(value);
    j.c_[index(axis == 0, axis == 1, axis == 2)] = 1.0;
    return j;
  }

  double value() const { return c_[0]; }
  double d(int a) const;
  double d(int a, int b) const;
  double d(int a, int b, int c) const;

  Jet3& operator+=(const Jet3& o) {
    for (int i = 0; i < kTerms; ++i) c_[i] += o.c_[i];
    return *this;
  }
  Jet3& operator-=(const Jet3& o) {
    for (int i = 0; i < kTerms; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  Jet3& operator*=(double s) {
    for (double& x : c_) x *= s;
    return *this;
  }

  friend Jet3 operator+(Jet3 a, const Jet3& b) { return a += b; }
  friend Jet3 operator-(Jet3 a, const Jet3& b) { return a -= b; }
  friend Jet3 operator-(Jet3 a) { return a *= -1.0; }
  friend Jet3 operator*(Jet3 a, double s) { return a *= s; }
  friend Jet3 operator*(double s, Jet3 a) { return a *= s; }
  friend Jet3 operator*(const Jet3& a, const Jet3& b);

  /// f(this) given f and its first three derivatives at value().
  Jet3 compose(double f0, double f1, double f2, double f3) const;

  friend Jet3 exp(const Jet3& x) {
    const double e = std::exp(x.value());
    return x.compose(e, e, e, e);
  }
  friend Jet3 sin(const Jet3& x) {
    const double s = std::sin(x.value()), c = std::cos(x.value());
    return x.compose(s, c, -s, -c);
  }
  friend Jet3 cos(const Jet3& x) {
    const double s = std::sin(x.value()), c = std::cos(x.value());
    return x.compose(c, -s, -c, s);
  }

  static constexpr int index(int i, int j, int k) { return kIndex[i][j][k]; }

 private:
  // Monomials x^i y^j z^k with i+j+k <= 3, graded by total degree.
  static constexpr std::array<std::array<std::array<int, 4>, 4>, 4> kIndex = [] {
    std::array<std::array<std::array<int, 4>, 4>, 4> t{};
    for (auto& a : t)
      for (auto& b : a) b.fill(-1);
    int n = 0;
    for (int deg = 0; deg <= 3; ++deg)
      for (int i = deg; i >= 0; --i)
        for (int j = deg - i; j >= 0; --j) t[i][j][deg - i - j] = n++;
    return t;
  }();

  std::array<double, kTerms> c_{};
};

}  // namespace mcxc
