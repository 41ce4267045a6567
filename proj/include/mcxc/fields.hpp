#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mcxc/angular.hpp"
#include "mcxc/taylor_jet.hpp"

namespace mcxc {

/// Density and magnetization data at one spatial quadrature point.
///
/// Matrix conventions: grad_m(a, b) = d_a m_b, hess_m[b](a, c) = d_a d_c m_b,
/// grad_lap_m(a, b) = d_a lap(m_b), grad_u(a, b) = d_a u_b.
/// The third-order entries (hess_*, grad_lap_*, grad_tau, grad_u) are only
/// meaningful when the owning GridField reports has_second_derivatives().
struct FieldPoint {
  Vec3 r = Vec3::Zero();
  double w = 1.0;

  double n = 0.0;
  Vec3 grad_n = Vec3::Zero();
  Mat3 hess_n = Mat3::Zero();
  double lap_n = 0.0;
  Vec3 grad_lap_n = Vec3::Zero();
  double tau = 0.0;
  Vec3 grad_tau = Vec3::Zero();

  Vec3 m = Vec3::Zero();
  Mat3 grad_m = Mat3::Zero();
  std::array<Mat3, 3> hess_m = {Mat3::Zero(), Mat3::Zero(), Mat3::Zero()};
  Vec3 lap_m = Vec3::Zero();
  Mat3 grad_lap_m = Mat3::Zero();
  Vec3 u = Vec3::Zero();
  Mat3 grad_u = Mat3::Zero();
};

/// Axis-aligned box [lo, hi].
struct Box {
  Vec3 lo = Vec3::Constant(-0.5);
  Vec3 hi = Vec3::Constant(0.5);

  double volume() const { return (hi - lo).prod(); }
  static Box centered(double edge) { return {Vec3::Constant(-0.5 * edge), Vec3::Constant(0.5 * edge)}; }
};

/// Proper rotation in spin space.
class SpinRotation {
 public:
  SpinRotation() = default;
  /// Throws std::invalid_argument unless R^T R = I within 1e-13 and det R = +1.
  explicit SpinRotation(const Mat3& matrix);

  static SpinRotation about_axis(const Vec3& axis, double angle);
  /// Rotation of the unit quaternion (w, x, y, z); normalized on entry.
  static SpinRotation from_quaternion(double w, double x, double y, double z);

  const Mat3& matrix() const { return matrix_; }
  bool is_identity() const { return matrix_ == Mat3::Identity(); }
  SpinRotation operator*(const SpinRotation& other) const {
    return SpinRotation(matrix_ * other.matrix_);
  }

 private:
  Mat3 matrix_ = Mat3::Identity();
};

/// The 24 proper rotations that map the coordinate axes onto themselves.
std::vector<SpinRotation> octahedral_rotations();

/// Key-value scene parameters; scalars are one-element vectors.
using SceneParams = std::map<std::string, std::vector<double>, std::less<>>;

/// Analytic density/magnetization model. Implementations express n, m, tau
/// and u through Jet3 so that every derivative is exact.
class Scene {
 public:
  struct Jets {
    Jet3 n;
    std::array<Jet3, 3> m;
    Jet3 tau;
    std::array<Jet3, 3> u;
  };

  virtual ~Scene() = default;
  virtual std::string_view name() const = 0;

  /// All FieldPoint entries at r, with unit weight.
  FieldPoint evaluate(const Vec3& r) const;

 protected:
  virtual Jets fields(const std::array<Jet3, 3>& r) const = 0;
};

/// Registered scene names: uniform_collinear, two_region, quadratic_mx,
/// spin_spiral, gaussian_blob, closed_shell.
std::vector<std::string> scene_names();

/// Builds a registered scene. Unknown names, unknown keys, missing required
/// keys and wrongly sized values throw std::invalid_argument naming the
/// offending field.
std::shared_ptr<const Scene> make_scene(std::string_view name, const SceneParams& params = {});

/// Points with weights on a box. If built by `sample`, the field remembers
/// its scene so quantities can be re-evaluated at displaced positions.
class GridField {
 public:
  GridField() = default;
  GridField(std::vector<FieldPoint> points, Box box, std::string scene_id,
            bool has_second_derivatives = false);

  const std::vector<FieldPoint>& points() const { return points_; }
  std::vector<FieldPoint>& points() { return points_; }
  std::size_t size() const { return points_.size(); }
  const FieldPoint& operator[](std::size_t i) const { return points_[i]; }
  const Box& box() const { return box_; }
  const std::string& scene_id() const { return scene_id_; }
  bool has_second_derivatives() const { return has_second_derivatives_; }

  /// Scene that produced the points, or null. spin_frame() is the spin
  /// rotation applied since sampling.
  const std::shared_ptr<const Scene>& scene() const { return scene_; }
  const SpinRotation& spin_frame() const { return spin_frame_; }

  /// Fresh point at r from the source scene in the current spin frame.
  /// Throws std::logic_error when no scene is attached.
  FieldPoint evaluate_at(const Vec3& r) const;

  double total_weight() const;

 private:
  friend GridField sample(std::shared_ptr<const Scene>, const Box&, int);
  friend GridField rotate_spin(const GridField&, const SpinRotation&);

  std::vector<FieldPoint> points_;
  Box box_;
  std::string scene_id_;
  bool has_second_derivatives_ = false;
  std::shared_ptr<const Scene> scene_;
  SpinRotation spin_frame_;
};

/// Tensor-product Gauss-Legendre grid with n_per_axis nodes per axis.
GridField sample(std::shared_ptr<const Scene> scene, const Box& box, int n_per_axis);

/// Applies R to every spin quantity (m, u and their derivatives); density
/// channels are untouched.
GridField rotate_spin(const GridField& field, const SpinRotation& rotation);
FieldPoint rotate_spin(const FieldPoint& point, const Mat3& rotation);

/// A field point seen along one spin direction: density channels unchanged,
/// spin channels projected onto the direction.
struct ProjectedPoint {
  double n = 0.0;
  Vec3 grad_n = Vec3::Zero();
  double lap_n = 0.0;
  double tau = 0.0;

  double m_w = 0.0;
  Vec3 grad_m_w = Vec3::Zero();
  double lap_m_w = 0.0;
  double u_w = 0.0;
};

ProjectedPoint project(const FieldPoint& p, const Vec3& e);
inline ProjectedPoint project(const FieldPoint& p, const Direction& d) { return project(p, d.e); }

}  // namespace mcxc
