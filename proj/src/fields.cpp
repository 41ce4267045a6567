#include "mcxc/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Geometry>

#include "mcxc/parallel.hpp"

namespace mcxc {

SpinRotation::SpinRotation(const Mat3& matrix) : matrix_(matrix) {
  const double orth = (matrix.transpose() * matrix - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (!(orth <= 1e-13) || !(matrix.determinant() > 0.0)) {
    throw std::invalid_argument("spin rotation must be orthogonal with determinant +1");
  }
}

SpinRotation SpinRotation::about_axis(const Vec3& axis, double angle) {
  return SpinRotation(Eigen::AngleAxisd(angle, axis.normalized()).toRotationMatrix());
}

SpinRotation SpinRotation::from_quaternion(double w, double x, double y, double z) {
  Eigen::Quaterniond q(w, x, y, z);
  if (!(q.norm() > 0.0)) throw std::invalid_argument("quaternion must be nonzero");
  q.normalize();
  return SpinRotation(q.toRotationMatrix());
}

std::vector<SpinRotation> octahedral_rotations() {
  std::vector<SpinRotation> out;
  std::array<int, 3> perm = {0, 1, 2};
  do {
    for (int signs = 0; signs < 8; ++signs) {
      Mat3 r = Mat3::Zero();
      for (int row = 0; row < 3; ++row) r(row, perm[row]) = ((signs >> row) & 1) ? -1.0 : 1.0;
      if (r.determinant() > 0.0) out.emplace_back(r);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

FieldPoint Scene::evaluate(const Vec3& r) const {
  const std::array<Jet3, 3> x = {Jet3::variable(0, r.x()), Jet3::variable(1, r.y()),
                                 Jet3::variable(2, r.z())};
  const Jets j = fields(x);

  FieldPoint p;
  p.r = r;
  p.w = 1.0;
  p.n = j.n.value();
  p.tau = j.tau.value();
  for (int a = 0; a < 3; ++a) {
    p.grad_n[a] = j.n.d(a);
    p.grad_tau[a] = j.tau.d(a);
    for (int c = 0; c < 3; ++c) {
      p.hess_n(a, c) = j.n.d(a, c);
      p.grad_lap_n[a] += j.n.d(a, c, c);
    }
  }
  p.lap_n = p.hess_n.trace();

  for (int b = 0; b < 3; ++b) {
    const Jet3& mb = j.m[b];
    p.m[b] = mb.value();
    p.u[b] = j.u[b].value();
    for (int a = 0; a < 3; ++a) {
      p.grad_m(a, b) = mb.d(a);
      p.grad_u(a, b) = j.u[b].d(a);
      for (int c = 0; c < 3; ++c) {
        p.hess_m[b](a, c) = mb.d(a, c);
        p.grad_lap_m(a, b) += mb.d(a, c, c);
      }
    }
    p.lap_m[b] = p.hess_m[b].trace();
  }
  return p;
}

GridField::GridField(std::vector<FieldPoint> points, Box box, std::string scene_id,
                     bool has_second_derivatives)
    : points_(std::move(points)),
      box_(box),
      scene_id_(std::move(scene_id)),
      has_second_derivatives_(has_second_derivatives) {}

FieldPoint GridField::evaluate_at(const Vec3& r) const {
  if (!scene_) throw std::logic_error("field '" + scene_id_ + "' has no source scene");
  FieldPoint p = scene_->evaluate(r);
  if (!spin_frame_.is_identity()) p = rotate_spin(p, spin_frame_.matrix());
  return p;
}

double GridField::total_weight() const {
  double sum = 0.0;
  for (const auto& p : points_) sum += p.w;
  return sum;
}

GridField sample(std::shared_ptr<const Scene> scene, const Box& box, int n_per_axis) {
  if (!scene) throw std::invalid_argument("sample: null scene");
  if (n_per_axis < 1) throw std::invalid_argument("sample: n_per_axis must be >= 1");
  for (int a = 0; a < 3; ++a) {
    if (!(box.hi[a] > box.lo[a])) {
      throw std::invalid_argument("sample: degenerate box along axis " + std::to_string(a));
    }
  }
  std::array<std::pair<std::vector<double>, std::vector<double>>, 3> rules;
  for (int a = 0; a < 3; ++a) rules[a] = gauss_legendre_rule(n_per_axis, box.lo[a], box.hi[a]);

  const std::size_t n = n_per_axis;
  std::vector<FieldPoint> points(n * n * n);
  parallel_for(points.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t i = idx / (n * n), j = (idx / n) % n, k = idx % n;
      const Vec3 r(rules[0].first[i], rules[1].first[j], rules[2].first[k]);
      FieldPoint p = scene->evaluate(r);
      p.w = rules[0].second[i] * rules[1].second[j] * rules[2].second[k];
      points[idx] = p;
    }
  });

  GridField field(std::move(points), box, std::string(scene->name()), true);
  field.scene_ = std::move(scene);
  return field;
}

FieldPoint rotate_spin(const FieldPoint& p, const Mat3& rot) {
  FieldPoint q = p;
  q.m = rot * p.m;
  q.grad_m = p.grad_m * rot.transpose();
  for (int b = 0; b < 3; ++b) {
    q.hess_m[b] = rot(b, 0) * p.hess_m[0] + rot(b, 1) * p.hess_m[1] + rot(b, 2) * p.hess_m[2];
  }
  q.lap_m = rot * p.lap_m;
  q.grad_lap_m = p.grad_lap_m * rot.transpose();
  q.u = rot * p.u;
  q.grad_u = p.grad_u * rot.transpose();
  return q;
}

GridField rotate_spin(const GridField& field, const SpinRotation& rotation) {
  GridField out = field;
  if (rotation.is_identity()) return out;
  const Mat3& rot = rotation.matrix();
  for (auto& p : out.points_) p = rotate_spin(p, rot);
  out.spin_frame_ = rotation * field.spin_frame_;
  return out;
}

ProjectedPoint project(const FieldPoint& p, const Vec3& e) {
  ProjectedPoint q;
  q.n = p.n;
  q.grad_n = p.grad_n;
  q.lap_n = p.lap_n;
  q.tau = p.tau;
  q.m_w = p.m.dot(e);
  q.grad_m_w = p.grad_m * e;
  q.lap_m_w = p.lap_m.dot(e);
  q.u_w = p.u.dot(e);
  return q;
}

}  // namespace mcxc
