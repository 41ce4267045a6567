// Shared helpers for the test executables.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "mcxc/fields.hpp"
#include "mcxc/functionals.hpp"

namespace mcxc::testing {

/// |a - b| / max(|a|, |b|, 1).
inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1.0});
}

/// Fourth-order central difference of a scalar function of one variable.
inline double central(const std::function<double(double)>& f, double x, double h) {
  return (8.0 * (f(x + h) - f(x - h)) - (f(x + 2.0 * h) - f(x - 2.0 * h))) / (12.0 * h);
}

/// Random inputs inside each registry functional's domain: n in [0.3, 2],
/// |s| <= 0.8 n, everything else in [-1.5, 1.5], tau in [0.2, 2].
inline std::vector<double> random_inputs(const CollinearFunctional& f, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  std::uniform_real_distribution<double> pos(0.3, 2.0);
  std::uniform_real_distribution<double> frac(-0.8, 0.8);
  const auto& vars = f.variables();
  std::vector<double> v(vars.size());
  double n = pos(rng);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    switch (vars[i]) {
      case Var::n: v[i] = n; break;
      case Var::tau: v[i] = pos(rng); break;
      case Var::s: v[i] = vars.contains(Var::n) ? frac(rng) * n : u(rng); break;
      default: v[i] = u(rng); break;
    }
  }
  return v;
}

/// A Gaussian-decaying non-collinear scene on which boundary terms are
/// negligible for box = [-3, 3]^3.
inline std::shared_ptr<const Scene> blob(double kx = 1.3, double ky = 0.9, double mag = 0.6) {
  return make_scene("gaussian_blob", {{"kx", {kx}}, {"ky", {ky}}, {"mag", {mag}}});
}

inline Box wide_box() { return Box::centered(6.0); }

}  // namespace mcxc::testing
