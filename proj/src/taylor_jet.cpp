#include "mcxc/taylor_jet.hpp"

namespace mcxc {

namespace {

struct Exponents {
  int i, j, k;
};

constexpr std::array<Exponents, Jet3::kTerms> kExponents = [] {
  std::array<Exponents, Jet3::kTerms> e{};
  int n = 0;
  for (int deg = 0; deg <= 3; ++deg)
    for (int i = deg; i >= 0; --i)
      for (int j = deg - i; j >= 0; --j) e[n++] = {i, j, deg - i - j};
  return e;
}();

constexpr int kFactorial[4] = {1, 1, 2, 6};

double derivative(const std::array<double, Jet3::kTerms>& c, int nx, int ny, int nz) {
  return c[Jet3::index(nx, ny, nz)] * kFactorial[nx] * kFactorial[ny] * kFactorial[nz];
}

}  // namespace

double Jet3::d(int a) const {
  int n[3] = {0, 0, 0};
  ++n[a];
  return derivative(c_, n[0], n[1], n[2]);
}

double Jet3::d(int a, int b) const {
  int n[3] = {0, 0, 0};
  ++n[a];
  ++n[b];
  return derivative(c_, n[0], n[1], n[2]);
}

double Jet3::d(int a, int b, int c) const {
  int n[3] = {0, 0, 0};
  ++n[a];
  ++n[b];
  ++n[c];
  return derivative(c_, n[0], n[1], n[2]);
}

Jet3 operator*(const Jet3& a, const Jet3& b) {
  Jet3 r;
  for (int p = 0; p < Jet3::kTerms; ++p) {
    if (a.c_[p] == 0.0) continue;
    const auto& ep = kExponents[p];
    const int dp = ep.i + ep.j + ep.k;
    for (int q = 0; q < Jet3::kTerms; ++q) {
      const auto& eq = kExponents[q];
      if (dp + eq.i + eq.j + eq.k > 3) break;
      r.c_[Jet3::index(ep.i + eq.i, ep.j + eq.j, ep.k + eq.k)] += a.c_[p] * b.c_[q];
    }
  }
  return r;
}

Jet3 Jet3::compose(double f0, double f1, double f2, double f3) const {
  Jet3 h = *this;
  h.c_[0] = 0.0;
  const Jet3 h2 = h * h;
  const Jet3 h3 = h2 * h;
  Jet3 r = f1 * h + (0.5 * f2) * h2 + (f3 / 6.0) * h3;
  r.c_[0] = f0;
  return r;
}

}  // namespace mcxc
