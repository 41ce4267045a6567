#include <catch2/catch_amalgamated.hpp>

#include <numbers>
#include <random>

#include "mcxc/fields.hpp"
#include "mcxc/parallel.hpp"
#include "support.hpp"

using namespace mcxc;
using Catch::Matchers::ContainsSubstring;

namespace {

std::vector<std::shared_ptr<const Scene>> catalog() {
  return {
      make_scene("uniform_collinear", {{"m0", {0.1, -0.2, 0.4}}}),
      make_scene("two_region", {{"m1", {0.0, 0.0, 0.7}}, {"m2", {0.3, -0.5, 0.1}}}),
      make_scene("quadratic_mx"),
      make_scene("spin_spiral", {{"q", {1.7}}, {"m0", {0.6}}}),
      make_scene("gaussian_blob"),
      make_scene("closed_shell"),
  };
}

// Central difference of a vector-valued quantity of the field point along
// every axis; row a holds d_a.
template <typename Get>
Eigen::MatrixXd fd_rows(const Scene& s, const Vec3& r, Get get, double h = 1e-5) {
  const Eigen::VectorXd probe = get(s.evaluate(r));
  Eigen::MatrixXd out(3, probe.size());
  for (int a = 0; a < 3; ++a) {
    Vec3 p = r, m = r;
    p[a] += h;
    m[a] -= h;
    out.row(a) = ((get(s.evaluate(p)) - get(s.evaluate(m))) / (2.0 * h)).transpose();
  }
  return out;
}

Eigen::VectorXd scalar(double x) { return Eigen::VectorXd::Constant(1, x); }

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

bool same_point(const FieldPoint& a, const FieldPoint& b) {
  bool same = a.r == b.r && a.w == b.w && a.n == b.n && a.grad_n == b.grad_n &&
              a.hess_n == b.hess_n && a.lap_n == b.lap_n && a.grad_lap_n == b.grad_lap_n &&
              a.tau == b.tau && a.grad_tau == b.grad_tau && a.m == b.m && a.grad_m == b.grad_m &&
              a.lap_m == b.lap_m && a.grad_lap_m == b.grad_lap_m && a.u == b.u &&
              a.grad_u == b.grad_u;
  for (int k = 0; k < 3; ++k) same = same && a.hess_m[k] == b.hess_m[k];
  return same;
}

double max_spin_diff(const FieldPoint& a, const FieldPoint& b) {
  double d = std::max({(a.m - b.m).cwiseAbs().maxCoeff(), max_abs(a.grad_m - b.grad_m),
                       (a.lap_m - b.lap_m).cwiseAbs().maxCoeff(),
                       max_abs(a.grad_lap_m - b.grad_lap_m), (a.u - b.u).cwiseAbs().maxCoeff(),
                       max_abs(a.grad_u - b.grad_u)});
  for (int k = 0; k < 3; ++k) d = std::max(d, max_abs(a.hess_m[k] - b.hess_m[k]));
  return d;
}

}  // namespace

TEST_CASE("analytic scene derivatives match central differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  constexpr double tol = 1e-7;
  for (const auto& scene : catalog()) {
    CAPTURE(scene->name());
    for (int trial = 0; trial < 8; ++trial) {
      const Vec3 r(u(rng), u(rng), u(rng));
      const FieldPoint p = scene->evaluate(r);
      CHECK(max_abs(fd_rows(*scene, r, [](const FieldPoint& q) { return scalar(q.n); }) -
                    Eigen::MatrixXd(p.grad_n)) < tol);
      CHECK(max_abs(fd_rows(*scene, r, [](const FieldPoint& q) { return scalar(q.tau); }) -
                    Eigen::MatrixXd(p.grad_tau)) < tol);
      CHECK(max_abs(fd_rows(*scene, r, [](const FieldPoint& q) { return scalar(q.lap_n); }) -
                    Eigen::MatrixXd(p.grad_lap_n)) < tol);
      const Eigen::MatrixXd hess_n =
          fd_rows(*scene, r, [](const FieldPoint& q) { return Eigen::VectorXd(q.grad_n); });
      CHECK(max_abs(hess_n - p.hess_n) < tol);
      CHECK(std::abs(hess_n.trace() - p.lap_n) < tol);

      const auto grad_m = fd_rows(*scene, r, [](const FieldPoint& q) { return Eigen::VectorXd(q.m); });
      CHECK(max_abs(grad_m - p.grad_m) < tol);
      const auto grad_u = fd_rows(*scene, r, [](const FieldPoint& q) { return Eigen::VectorXd(q.u); });
      CHECK(max_abs(grad_u - p.grad_u) < tol);
      const auto grad_lap_m =
          fd_rows(*scene, r, [](const FieldPoint& q) { return Eigen::VectorXd(q.lap_m); });
      CHECK(max_abs(grad_lap_m - p.grad_lap_m) < tol);
      for (int b = 0; b < 3; ++b) {
        const auto hess_b = fd_rows(*scene, r, [b](const FieldPoint& q) {
          return Eigen::VectorXd(q.grad_m.col(b));
        });
        CHECK(max_abs(hess_b - p.hess_m[b]) < tol);
        CHECK(std::abs(hess_b.trace() - p.lap_m[b]) < tol);
      }
    }
  }
}

TEST_CASE("scene formulas") {
  SECTION("quadratic_mx") {
    const auto s = make_scene("quadratic_mx");
    const FieldPoint p = s->evaluate(Vec3(0.7, -0.3, 0.2));
    CHECK(p.m.isApprox(Vec3(0.49, 0.0, 1.0), 1e-15));
    CHECK(p.lap_m.isApprox(Vec3(2.0, 0.0, 0.0), 1e-15));
    CHECK(p.grad_m(0, 0) == Catch::Approx(1.4).epsilon(1e-15));
  }
  SECTION("spin_spiral") {
    const double q = 1.3, m0 = 0.8, z = 0.45;
    const auto s = make_scene("spin_spiral", {{"q", {q}}, {"m0", {m0}}});
    const FieldPoint p = s->evaluate(Vec3(0.1, 0.2, z));
    CHECK((p.m - m0 * Vec3(std::cos(q * z), std::sin(q * z), 0.0)).norm() < 1e-15);
    CHECK((p.lap_m + q * q * p.m).norm() < 1e-14);
  }
  SECTION("closed_shell has no spin") {
    const GridField f = sample(make_scene("closed_shell"), Box::centered(2.0), 5);
    for (const auto& p : f.points()) {
      CHECK(p.m == Vec3::Zero());
      CHECK(p.u == Vec3::Zero());
      CHECK(p.n > 0.0);
    }
  }
  SECTION("tau bounds |u| for the default parameters") {
    for (const auto& scene : catalog()) {
      const GridField f = sample(scene, Box::centered(2.0), 5);
      for (const auto& p : f.points()) CHECK(p.tau >= p.u.norm());
    }
  }
}

TEST_CASE("make_scene validates its input") {
  CHECK_THROWS_WITH(make_scene("vortex"), ContainsSubstring("unknown scene 'vortex'"));
  CHECK_THROWS_WITH(make_scene("spin_spiral", {{"q", {1.0}}}), ContainsSubstring("'m0'"));
  CHECK_THROWS_WITH(make_scene("quadratic_mx", {{"pitch", {1.0}}}),
                    ContainsSubstring("unknown parameter 'pitch'"));
  CHECK_THROWS_WITH(make_scene("uniform_collinear", {{"m0", {1.0, 2.0}}}),
                    ContainsSubstring("'m0' needs 3"));
  CHECK_THROWS_AS(make_scene("gaussian_blob", {{"sigma", {0.0}}}), std::invalid_argument);
}

TEST_CASE("sample builds a Gauss-Legendre product grid") {
  SECTION("weights sum to the box volume") {
    const auto s = make_scene("uniform_collinear", {{"m0", {0.0, 0.0, 1.0}}});
    CHECK(sample(s, Box::centered(1.0), 4).total_weight() == Catch::Approx(1.0).epsilon(1e-12));
    const Box box{Vec3(-1.0, 0.0, 2.0), Vec3(0.5, 3.0, 2.25)};
    CHECK(sample(s, box, 7).total_weight() == Catch::Approx(box.volume()).epsilon(1e-12));
  }
  SECTION("integrates a smooth density") {
    // int exp(-x^2/(2 s^2)) over [-3, 3] per axis, via erf.
    const double sigma = 0.5;
    const double one_d = sigma * std::sqrt(2.0 * std::numbers::pi) * std::erf(3.0 / (sigma * std::sqrt(2.0)));
    const GridField f = sample(make_scene("closed_shell", {{"n0", {0.0}}}), Box::centered(6.0), 40);
    double total = 0.0;
    for (const auto& p : f.points()) total += p.w * p.n;
    CHECK(total == Catch::Approx(one_d * one_d * one_d).epsilon(1e-12));
  }
  SECTION("quadratic_mx derivatives at x = 0") {
    const GridField f = sample(make_scene("quadratic_mx"), Box::centered(2.0), 3);
    int found = 0;
    for (const auto& p : f.points()) {
      if (p.r.x() != 0.0) continue;
      ++found;
      CHECK(p.grad_m.row(0).norm() == 0.0);
      CHECK(p.lap_m == Vec3(2.0, 0.0, 0.0));
    }
    CHECK(found == 9);
  }
  SECTION("errors") {
    const auto s = make_scene("quadratic_mx");
    CHECK_THROWS_AS(sample(s, Box{Vec3(0, 0, 0), Vec3(1, 0, 1)}, 3), std::invalid_argument);
    CHECK_THROWS_AS(sample(s, Box::centered(1.0), 0), std::invalid_argument);
    CHECK_THROWS_AS(sample(nullptr, Box::centered(1.0), 2), std::invalid_argument);
  }
  SECTION("independent of the thread count") {
    set_thread_count(1);
    const GridField a = sample(testing::blob(), Box::centered(2.0), 6);
    set_thread_count(5);
    const GridField b = sample(testing::blob(), Box::centered(2.0), 6);
    set_thread_count(0);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_point(a[i], b[i]));
  }
}

TEST_CASE("project") {
  FieldPoint p;
  p.m = Vec3(0.0, 0.0, 1.0);
  CHECK(project(p, Vec3::UnitZ()).m_w == 1.0);
  CHECK(project(p, Vec3::UnitX()).m_w == 0.0);

  const FieldPoint q = make_scene("quadratic_mx")->evaluate(Vec3(1.0, 0.3, -0.2));
  const ProjectedPoint pq = project(q, Direction::from_vector(Vec3::UnitX()));
  CHECK(pq.m_w == 1.0);
  CHECK(pq.lap_m_w == 2.0);

  SECTION("odd channels are linear in the direction, even ones copied") {
    const FieldPoint s = testing::blob()->evaluate(Vec3(0.2, -0.1, 0.3));
    const Vec3 e1(0.25, -0.5, 1.0), e2(-1.0, 0.125, 0.5);
    const double a = 2.0, b = -0.5;
    const ProjectedPoint p1 = project(s, e1), p2 = project(s, e2), p12 = project(s, a * e1 + b * e2);
    CHECK(p12.m_w == Catch::Approx(a * p1.m_w + b * p2.m_w).margin(1e-15));
    CHECK((p12.grad_m_w - (a * p1.grad_m_w + b * p2.grad_m_w)).norm() < 1e-15);
    CHECK(p12.lap_m_w == Catch::Approx(a * p1.lap_m_w + b * p2.lap_m_w).margin(1e-14));
    CHECK(p12.u_w == Catch::Approx(a * p1.u_w + b * p2.u_w).margin(1e-15));
    CHECK(p12.n == s.n);
    CHECK(p12.grad_n == s.grad_n);
    CHECK(p12.lap_n == s.lap_n);
    CHECK(p12.tau == s.tau);

    const ProjectedPoint neg = project(s, -e1);
    CHECK(neg.m_w == -p1.m_w);
    CHECK(neg.grad_m_w == -p1.grad_m_w);
    CHECK(neg.lap_m_w == -p1.lap_m_w);
    CHECK(neg.u_w == -p1.u_w);
  }
}

TEST_CASE("spin rotations") {
  const GridField f = sample(testing::blob(), Box::centered(2.0), 4);

  SECTION("identity leaves the field bitwise unchanged") {
    const GridField g = rotate_spin(f, SpinRotation());
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(same_point(f[i], g[i]));
  }
  SECTION("half turn about x flips m_z") {
    const auto s = make_scene("uniform_collinear", {{"m0", {0.0, 0.0, 1.0}}});
    const GridField g = rotate_spin(sample(s, Box::centered(1.0), 2),
                                    SpinRotation::about_axis(Vec3::UnitX(), std::numbers::pi));
    for (const auto& p : g.points()) CHECK((p.m - Vec3(0.0, 0.0, -1.0)).norm() < 1e-15);
  }
  SECTION("isometry, density untouched, composition") {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g(0.0, 1.0);
    for (int t = 0; t < 10; ++t) {
      const auto r1 = SpinRotation::from_quaternion(g(rng), g(rng), g(rng), g(rng));
      const auto r2 = SpinRotation::from_quaternion(g(rng), g(rng), g(rng), g(rng));
      const GridField a = rotate_spin(f, r1 * r2);
      const GridField b = rotate_spin(rotate_spin(f, r2), r1);
      for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(std::abs(a[i].m.norm() - f[i].m.norm()) < 1e-13);
        CHECK(a[i].n == f[i].n);
        CHECK(a[i].grad_n == f[i].grad_n);
        CHECK(a[i].tau == f[i].tau);
        CHECK(max_spin_diff(a[i], b[i]) < 1e-13);
      }
    }
  }
  SECTION("rotated field re-evaluates in the rotated frame") {
    const auto rot = SpinRotation::about_axis(Vec3(1.0, 2.0, -0.5), 0.7);
    const GridField g = rotate_spin(f, rot);
    for (std::size_t i = 0; i < g.size(); i += 7) {
      CHECK(max_spin_diff(g.evaluate_at(g[i].r), g[i]) < 1e-14);
    }
    CHECK_THROWS_AS(GridField(f.points(), f.box(), "copy").evaluate_at(Vec3::Zero()),
                    std::logic_error);
  }
  SECTION("non-orthogonal matrices are rejected") {
    Mat3 m = Mat3::Identity();
    m(0, 1) = 1e-6;
    CHECK_THROWS_AS(SpinRotation(m), std::invalid_argument);
    CHECK_THROWS_AS(SpinRotation(Mat3(Vec3(1.0, 1.0, -1.0).asDiagonal())), std::invalid_argument);
  }
  SECTION("octahedral group") {
    const auto group = octahedral_rotations();
    CHECK(group.size() == 24);
    for (const auto& r : group) CHECK(r.matrix().cwiseAbs().sum() == 3.0);
  }
}
