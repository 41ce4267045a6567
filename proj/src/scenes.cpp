// Scene catalog. Every scene keeps tau >= |u| pointwise for its default
// parameters; for slater_lsda the caller keeps |m| < n.

#include <cmath>
#include <set>
#include <stdexcept>

#include "mcxc/fields.hpp"

namespace mcxc {

namespace {

class ParamReader {
 public:
  ParamReader(std::string_view scene, const SceneParams& params) : scene_(scene), params_(params) {}

  double scalar(std::string_view key, std::optional<double> fallback = std::nullopt) {
    const auto* v = lookup(key, 1, fallback.has_value());
    return v ? (*v)[0] : *fallback;
  }

  Vec3 vec3(std::string_view key, std::optional<Vec3> fallback = std::nullopt) {
    const auto* v = lookup(key, 3, fallback.has_value());
    return v ? Vec3((*v)[0], (*v)[1], (*v)[2]) : *fallback;
  }

  /// Rejects keys no reader asked for.
  void finish() const {
    for (const auto& [key, value] : params_) {
      if (!used_.contains(key)) {
        throw std::invalid_argument("scene '" + scene_ + "': unknown parameter '" + key + "'");
      }
    }
  }

 private:
  const std::vector<double>* lookup(std::string_view key, std::size_t size, bool optional) {
    used_.emplace(key);
    auto it = params_.find(key);
    if (it == params_.end()) {
      if (optional) return nullptr;
      throw std::invalid_argument("scene '" + scene_ + "': missing required parameter '" +
                                  std::string(key) + "'");
    }
    if (it->second.size() != size) {
      throw std::invalid_argument("scene '" + scene_ + "': parameter '" + std::string(key) +
                                  "' needs " + std::to_string(size) + " value(s)");
    }
    for (double x : it->second) {
      if (!std::isfinite(x)) {
        throw std::invalid_argument("scene '" + scene_ + "': parameter '" + std::string(key) +
                                    "' is not finite");
      }
    }
    return &it->second;
  }

  std::string scene_;
  const SceneParams& params_;
  std::set<std::string, std::less<>> used_;
};

std::array<Jet3, 3> scaled(const Vec3& v, const Jet3& s) { return {v.x() * s, v.y() * s, v.z() * s}; }

Jet3 gaussian(const std::array<Jet3, 3>& r, const Vec3& center, double sigma) {
  Jet3 r2;
  for (int a = 0; a < 3; ++a) {
    const Jet3 d = r[a] - Jet3(center[a]);
    r2 += d * d;
  }
  return exp(r2 * (-0.5 / (sigma * sigma)));
}

class UniformCollinear final : public Scene {
 public:
  explicit UniformCollinear(ParamReader& p)
      : m0_(p.vec3("m0")),
        n0_(p.scalar("n0", 1.0)),
        tau0_(p.scalar("tau0", 1.0)),
        u_scale_(p.scalar("u_scale", 0.5)) {}
  std::string_view name() const override { return "uniform_collinear"; }

 protected:
  Jets fields(const std::array<Jet3, 3>&) const override {
    Jets j;
    j.n = n0_;
    j.tau = tau0_;
    for (int a = 0; a < 3; ++a) {
      j.m[a] = m0_[a];
      j.u[a] = u_scale_ * m0_[a];
    }
    return j;
  }

 private:
  Vec3 m0_;
  double n0_, tau0_, u_scale_;
};

// Two Gaussian bumps carrying independently oriented magnetization.
class TwoRegion final : public Scene {
 public:
  explicit TwoRegion(ParamReader& p)
      : m1_(p.vec3("m1")),
        m2_(p.vec3("m2")),
        c1_(p.vec3("c1", Vec3(-0.6, 0.0, 0.0))),
        c2_(p.vec3("c2", Vec3(0.6, 0.0, 0.0))),
        sigma_(p.scalar("sigma", 0.35)),
        n0_(p.scalar("n0", 0.1)),
        amp_(p.scalar("amp", 1.0)),
        tau_scale_(p.scalar("tau_scale", 1.0)),
        u_scale_(p.scalar("u_scale", 0.5)) {
    if (!(sigma_ > 0.0)) throw std::invalid_argument("scene 'two_region': sigma must be > 0");
  }
  std::string_view name() const override { return "two_region"; }

 protected:
  Jets fields(const std::array<Jet3, 3>& r) const override {
    const Jet3 g1 = gaussian(r, c1_, sigma_);
    const Jet3 g2 = gaussian(r, c2_, sigma_);
    Jets j;
    j.n = Jet3(n0_) + amp_ * (g1 + g2);
    j.tau = tau_scale_ * j.n;
    const auto a = scaled(m1_, g1);
    const auto b = scaled(m2_, g2);
    for (int k = 0; k < 3; ++k) {
      j.m[k] = a[k] + b[k];
      j.u[k] = u_scale_ * j.m[k];
    }
    return j;
  }

 private:
  Vec3 m1_, m2_, c1_, c2_;
  double sigma_, n0_, amp_, tau_scale_, u_scale_;
};

// m = (x^2, 0, 1) on a constant density.
class QuadraticMx final : public Scene {
 public:
  explicit QuadraticMx(ParamReader& p)
      : n0_(p.scalar("n0", 2.0)), tau0_(p.scalar("tau0", 2.0)), u_scale_(p.scalar("u_scale", 0.5)) {}
  std::string_view name() const override { return "quadratic_mx"; }

 protected:
  Jets fields(const std::array<Jet3, 3>& r) const override {
    Jets j;
    j.n = n0_;
    j.tau = tau0_;
    j.m = {r[0] * r[0], Jet3(0.0), Jet3(1.0)};
    for (int k = 0; k < 3; ++k) j.u[k] = u_scale_ * j.m[k];
    return j;
  }

 private:
  double n0_, tau0_, u_scale_;
};

// m = m0 (cos qz, sin qz, 0).
class SpinSpiral final : public Scene {
 public:
  explicit SpinSpiral(ParamReader& p)
      : q_(p.scalar("q")),
        m0_(p.scalar("m0")),
        n0_(p.scalar("n0", 1.0)),
        tau0_(p.scalar("tau0", 1.0)),
        u_scale_(p.scalar("u_scale", 0.5)) {}
  std::string_view name() const override { return "spin_spiral"; }

 protected:
  Jets fields(const std::array<Jet3, 3>& r) const override {
    Jets j;
    j.n = n0_;
    j.tau = tau0_;
    const Jet3 phase = q_ * r[2];
    j.m = {m0_ * cos(phase), m0_ * sin(phase), Jet3(0.0)};
    for (int k = 0; k < 3; ++k) j.u[k] = u_scale_ * j.m[k];
    return j;
  }

 private:
  double q_, m0_, n0_, tau0_, u_scale_;
};

// Localized non-collinear texture: |m| = mag * g(r) with a direction field
// that twists along x and y.
class GaussianBlob final : public Scene {
 public:
  explicit GaussianBlob(ParamReader& p)
      : center_(p.vec3("center", Vec3::Zero())),
        sigma_(p.scalar("sigma", 0.5)),
        n0_(p.scalar("n0", 0.05)),
        amp_(p.scalar("amp", 1.0)),
        mag_(p.scalar("mag", 0.6)),
        kx_(p.scalar("kx", 1.3)),
        ky_(p.scalar("ky", 0.9)),
        tau_scale_(p.scalar("tau_scale", 1.0)),
        u_scale_(p.scalar("u_scale", 0.5)) {
    if (!(sigma_ > 0.0)) throw std::invalid_argument("scene 'gaussian_blob': sigma must be > 0");
  }
  std::string_view name() const override { return "gaussian_blob"; }

 protected:
  Jets fields(const std::array<Jet3, 3>& r) const override {
    const Jet3 g = gaussian(r, center_, sigma_);
    const Jet3 ax = kx_ * (r[0] - Jet3(center_.x()));
    const Jet3 ay = ky_ * (r[1] - Jet3(center_.y()));
    const Jet3 cx = cos(ax);
    const Jet3 amp = mag_ * g;
    Jets j;
    j.n = Jet3(n0_) + amp_ * g;
    j.tau = tau_scale_ * j.n;
    j.m = {amp * sin(ax), amp * (cx * sin(ay)), amp * (cx * cos(ay))};
    for (int k = 0; k < 3; ++k) j.u[k] = u_scale_ * j.m[k];
    return j;
  }

 private:
  Vec3 center_;
  double sigma_, n0_, amp_, mag_, kx_, ky_, tau_scale_, u_scale_;
};

class ClosedShell final : public Scene {
 public:
  explicit ClosedShell(ParamReader& p)
      : sigma_(p.scalar("sigma", 0.5)),
        n0_(p.scalar("n0", 0.1)),
        amp_(p.scalar("amp", 1.0)),
        tau_scale_(p.scalar("tau_scale", 1.0)) {
    if (!(sigma_ > 0.0)) throw std::invalid_argument("scene 'closed_shell': sigma must be > 0");
  }
  std::string_view name() const override { return "closed_shell"; }

 protected:
  Jets fields(const std::array<Jet3, 3>& r) const override {
    Jets j;
    j.n = Jet3(n0_) + amp_ * gaussian(r, Vec3::Zero(), sigma_);
    j.tau = tau_scale_ * j.n;
    return j;
  }

 private:
  double sigma_, n0_, amp_, tau_scale_;
};

template <typename T>
std::shared_ptr<const Scene> build(std::string_view name, const SceneParams& params) {
  ParamReader reader(name, params);
  auto scene = std::make_shared<const T>(reader);
  reader.finish();
  return scene;
}

}  // namespace

std::vector<std::string> scene_names() {
  return {"uniform_collinear", "two_region",    "quadratic_mx",
          "spin_spiral",       "gaussian_blob", "closed_shell"};
}

std::shared_ptr<const Scene> make_scene(std::string_view name, const SceneParams& params) {
  if (name == "uniform_collinear") return build<UniformCollinear>(name, params);
  if (name == "two_region") return build<TwoRegion>(name, params);
  if (name == "quadratic_mx") return build<QuadraticMx>(name, params);
  if (name == "spin_spiral") return build<SpinSpiral>(name, params);
  if (name == "gaussian_blob") return build<GaussianBlob>(name, params);
  if (name == "closed_shell") return build<ClosedShell>(name, params);
  std::string known;
  for (const auto& s : scene_names()) known += " " + s;
  throw std::invalid_argument("unknown scene '" + std::string(name) + "'; known scenes:" + known);
}

}  // namespace mcxc
