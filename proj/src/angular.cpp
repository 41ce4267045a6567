#include "mcxc/angular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "lebedev_tables.hpp"

namespace mcxc {

namespace {

constexpr std::array<int, 13> kLebedevOrders = {3, 5, 7, 9, 11, 17, 23, 29, 35, 41, 47, 53, 59};
constexpr std::array<int, 13> kLebedevSizes = {6,   14,  26,  38,  50,  110, 194,
                                               302, 434, 590, 770, 974, 1202};

std::string supported_orders_message() {
  std::string msg = "supported Lebedev orders:";
  for (std::size_t i = 0; i < kLebedevOrders.size(); ++i) {
    msg += " " + std::to_string(kLebedevOrders[i]) + " (" + std::to_string(kLebedevSizes[i]) +
           " points)";
  }
  return msg;
}

// All distinct signed permutations of (p, q, r).
void expand_orbit(double p, double q, double r, std::vector<Vec3>& out) {
  std::array<double, 3> base = {p, q, r};
  std::array<int, 3> perm = {0, 1, 2};
  std::vector<Vec3> orbit;
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Vec3 v;
      for (int k = 0; k < 3; ++k) {
        double x = base[perm[k]];
        if ((signs >> k) & 1) x = -x;
        v[k] = x == 0.0 ? 0.0 : x;
      }
      if (std::find(orbit.begin(), orbit.end(), v) == orbit.end()) orbit.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.insert(out.end(), orbit.begin(), orbit.end());
}

void normalize_weights(std::vector<double>& weights) {
  double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  for (double& w : weights) w /= total;
}

double double_factorial(int n) {
  double r = 1.0;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace

Direction Direction::from_vector(const Vec3& v) {
  Direction d;
  d.e = v;
  d.theta = std::atan2(std::hypot(v.x(), v.y()), v.z());
  d.phi = std::atan2(v.y(), v.x());
  return d;
}

Direction Direction::from_angles(double theta, double phi) {
  Direction d;
  double st = std::sin(theta);
  d.e = Vec3(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
  d.theta = theta;
  d.phi = phi;
  return d;
}

std::string_view to_string(AngularScheme scheme) {
  switch (scheme) {
    case AngularScheme::Lebedev: return "lebedev";
    case AngularScheme::GaussLegendre: return "gauss_legendre";
    case AngularScheme::Fibonacci: return "fibonacci";
  }
  return "unknown";
}

AngularScheme angular_scheme_from_string(std::string_view name) {
  if (name == "lebedev") return AngularScheme::Lebedev;
  if (name == "gauss_legendre") return AngularScheme::GaussLegendre;
  if (name == "fibonacci") return AngularScheme::Fibonacci;
  throw std::invalid_argument("unknown angular scheme '" + std::string(name) +
                              "' (expected lebedev, gauss_legendre or fibonacci)");
}

AngularGrid::AngularGrid(AngularScheme scheme, std::vector<Direction> points,
                         std::vector<double> weights, std::optional<int> exact_degree)
    : scheme_(scheme),
      points_(std::move(points)),
      weights_(std::move(weights)),
      exact_degree_(exact_degree) {
  if (points_.empty() || points_.size() != weights_.size()) {
    throw std::invalid_argument("angular grid needs one weight per direction");
  }
}

std::span<const int> lebedev_orders() { return kLebedevOrders; }

int lebedev_point_count(int order) {
  for (std::size_t i = 0; i < kLebedevOrders.size(); ++i) {
    if (kLebedevOrders[i] == order) return kLebedevSizes[i];
  }
  throw std::invalid_argument("unsupported Lebedev order " + std::to_string(order) + "; " +
                              supported_orders_message());
}

AngularGrid lebedev_grid(int order) {
  const int expected = lebedev_point_count(order);
  std::vector<Vec3> vectors;
  std::vector<double> weights;
  vectors.reserve(expected);
  weights.reserve(expected);
  for (const auto& orbit : detail::lebedev_orbits(order)) {
    const std::size_t before = vectors.size();
    const double a = orbit.a;
    const double b = orbit.b;
    switch (orbit.type) {
      case 1: expand_orbit(1.0, 0.0, 0.0, vectors); break;
      case 2: expand_orbit(0.0, std::sqrt(0.5), std::sqrt(0.5), vectors); break;
      case 3: {
        const double c = std::sqrt(1.0 / 3.0);
        expand_orbit(c, c, c, vectors);
        break;
      }
      case 4: expand_orbit(a, a, std::sqrt(1.0 - 2.0 * a * a), vectors); break;
      case 5: expand_orbit(a, std::sqrt(1.0 - a * a), 0.0, vectors); break;
      case 6: expand_orbit(a, b, std::sqrt(1.0 - a * a - b * b), vectors); break;
      default: throw std::logic_error("corrupt Lebedev orbit table");
    }
    weights.insert(weights.end(), vectors.size() - before, orbit.weight);
  }
  if (static_cast<int>(vectors.size()) != expected) {
    throw std::logic_error("Lebedev orbit expansion produced the wrong point count");
  }
  normalize_weights(weights);
  std::vector<Direction> points;
  points.reserve(vectors.size());
  for (const auto& v : vectors) points.push_back(Direction::from_vector(v));
  return AngularGrid(AngularScheme::Lebedev, std::move(points), std::move(weights), order);
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n, double lo,
                                                                        double hi) {
  if (n < 1) throw std::invalid_argument("Gauss-Legendre rule needs at least one node");
  std::vector<double> x(n), w(n);
  // P_n(z) and P_n'(z) by the three-term recurrence.
  auto legendre = [n](double z) {
    double p0 = 1.0, p1 = z;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    return std::pair{p1, n * (z * p1 - p0) / (z * z - 1.0)};
  };
  // Newton on the upper half, then mirror so the rule is exactly symmetric.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(z);
      const double dz = p / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const double dp = legendre(z).second;
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[n - 1 - i] = z;
    x[i] = -z;
    w[i] = weight;
    w[n - 1 - i] = weight;
  }
  if (n % 2 == 1) x[n / 2] = 0.0;
  const double mid = 0.5 * (lo + hi);
  const double half_len = 0.5 * (hi - lo);
  for (int i = 0; i < n; ++i) {
    x[i] = mid + half_len * x[i];
    w[i] *= half_len;
  }
  return {std::move(x), std::move(w)};
}

AngularGrid gauss_legendre_grid(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1) {
    throw std::invalid_argument("Gauss-Legendre angular grid needs n_theta >= 1 and n_phi >= 1");
  }
  auto [t, wt] = gauss_legendre_rule(n_theta);
  std::vector<Direction> points;
  std::vector<double> weights;
  points.reserve(static_cast<std::size_t>(n_theta) * n_phi);
  weights.reserve(points.capacity());
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::acos(t[i]);
    const double st = std::sqrt(std::max(0.0, 1.0 - t[i] * t[i]));
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      Direction d;
      d.e = Vec3(st * std::cos(phi), st * std::sin(phi), t[i]);
      d.theta = theta;
      d.phi = phi;
      points.push_back(d);
      weights.push_back(0.5 * wt[i] / n_phi);
    }
  }
  normalize_weights(weights);
  return AngularGrid(AngularScheme::GaussLegendre, std::move(points), std::move(weights),
                     std::min(2 * n_theta - 1, n_phi - 1));
}

AngularGrid fibonacci_grid(int n) {
  if (n < 1) throw std::invalid_argument("Fibonacci lattice needs n >= 1");
  const double golden_conjugate = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<Direction> points;
  points.reserve(n);
  for (int k = 0; k < n; ++k) {
    const double t = 1.0 - (2.0 * k + 1.0) / n;
    double frac = std::fmod(k * golden_conjugate, 1.0);
    const double phi = 2.0 * std::numbers::pi * frac;
    const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
    Direction d;
    d.e = Vec3(st * std::cos(phi), st * std::sin(phi), t);
    d.theta = std::acos(t);
    d.phi = phi;
    points.push_back(d);
  }
  std::vector<double> weights(n, 1.0 / n);
  return AngularGrid(AngularScheme::Fibonacci, std::move(points), std::move(weights),
                     std::nullopt);
}

double moment(const AngularGrid& grid, int a, int b, int c) {
  auto ipow = [](double x, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= x;
    return r;
  };
  double sum = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Vec3& e = grid.point(i).e;
    sum += grid.weight(i) * ipow(e.x(), a) * ipow(e.y(), b) * ipow(e.z(), c);
  }
  return sum;
}

double sphere_moment(int a, int b, int c) {
  if (a % 2 || b % 2 || c % 2) return 0.0;
  return double_factorial(a - 1) * double_factorial(b - 1) * double_factorial(c - 1) /
         double_factorial(a + b + c + 1);
}

}  // namespace mcxc
