#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace mcxc {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// A unit vector in spin space together with its polar angles.
struct Direction {
  Vec3 e = Vec3::UnitZ();
  double theta = 0.0;
  double phi = 0.0;

  static Direction from_vector(const Vec3& v);
  static Direction from_angles(double theta, double phi);
};

enum class AngularScheme { Lebedev, GaussLegendre, Fibonacci };

std::string_view to_string(AngularScheme scheme);
AngularScheme angular_scheme_from_string(std::string_view name);

/// Discretized spherical average: directions with weights that sum to one.
/// Immutable once built.
class AngularGrid {
 public:
  AngularGrid(AngularScheme scheme, std::vector<Direction> points,
              std::vector<double> weights, std::optional<int> exact_degree);

  AngularScheme scheme() const { return scheme_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Direction>& points() const { return points_; }
  const std::vector<double>& weights() const { return weights_; }
  const Direction& point(std::size_t i) const { return points_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  /// Highest total degree in (e_x, e_y, e_z) integrated exactly; empty for
  /// lattices without a polynomial exactness guarantee.
  std::optional<int> exact_degree() const { return exact_degree_; }

 private:
  AngularScheme scheme_;
  std::vector<Direction> points_;
  std::vector<double> weights_;
  std::optional<int> exact_degree_;
};

/// Orders accepted by lebedev_grid, ascending.
std::span<const int> lebedev_orders();

/// Number of points of the Lebedev rule of the given order.
int lebedev_point_count(int order);

AngularGrid lebedev_grid(int order);

/// Tensor grid: Gauss-Legendre in t = cos(theta) times uniform phi.
AngularGrid gauss_legendre_grid(int n_theta, int n_phi);

/// Golden-angle spiral with t_k = 1 - (2k+1)/n and equal weights.
AngularGrid fibonacci_grid(int n);

/// Sum over the grid of w * e_x^a e_y^b e_z^c.
double moment(const AngularGrid& grid, int a, int b, int c);

/// Analytic average of e_x^a e_y^b e_z^c over the unit sphere.
double sphere_moment(int a, int b, int c);

/// n-point Gauss-Legendre nodes and weights on [lo, hi].
/// Nodes ascend; weights sum to (hi - lo).
std::pair<std::vector<double>, std::vector<double>> gauss_legendre_rule(int n, double lo = -1.0,
                                                                        double hi = 1.0);

}  // namespace mcxc
