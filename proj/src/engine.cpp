#include "mcxc/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Geometry>

#include "mcxc/parallel.hpp"

namespace mcxc {

namespace {

constexpr std::size_t kMaxNonlocalPoints = 10000;

int slot(Var v) { return static_cast<int>(v); }

struct PointChannels {
  double density = 0.0;
  double v_n = 0.0;
  Vec3 v_grad_n = Vec3::Zero();
  double v_lap_n = 0.0;
  double tau = 0.0;
  Vec3 m = Vec3::Zero();
  Mat3 grad = Mat3::Zero();
  Vec3 lap = Vec3::Zero();
  Vec3 u = Vec3::Zero();
  // Spatial derivatives: div_grad_b = sum_a d_a grad(a, b), grad_lap(a, b) = d_a lap_b.
  Vec3 div_grad = Vec3::Zero();
  Mat3 grad_lap = Mat3::Zero();
};

enum class Level { channels, jacobians };

// Direction loop for one point. Holds scratch buffers, so one per worker.
class DirectionAverager {
 public:
  DirectionAverager(const CollinearFunctional& f, const AngularGrid& ang) : f_(f), ang_(ang) {}

  double energy_density(const FieldPoint& p) {
    double sum = 0.0;
    for (std::size_t d = 0; d < ang_.size(); ++d) {
      const Vec3& e = ang_.point(d).e;
      f_.gather(variable_values(project(p, e)), values_);
      f_.evaluate(values_, 1, col_);
      sum += ang_.weight(d) * effective_integrand(col_, values_);
    }
    return sum;
  }

  PointChannels channels(const FieldPoint& p, Level level) {
    PointChannels out;
    const VariableSet& vars = f_.variables();
    const bool jac = level == Level::jacobians;
    for (std::size_t d = 0; d < ang_.size(); ++d) {
      const Vec3& e = ang_.point(d).e;
      const double w = ang_.weight(d);
      f_.gather(variable_values(project(p, e)), values_);
      f_.evaluate(values_, jac ? 3 : 2, col_);
      effective_eval(col_, values_, jac ? 2 : 1, eff_);
      out.density += w * eff_.f;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const double g = w * eff_.g(i);
        switch (vars[i]) {
          case Var::n: out.v_n += g; break;
          case Var::grad_n_x: out.v_grad_n.x() += g; break;
          case Var::grad_n_y: out.v_grad_n.y() += g; break;
          case Var::grad_n_z: out.v_grad_n.z() += g; break;
          case Var::lap_n: out.v_lap_n += g; break;
          case Var::tau: out.tau += g; break;
          case Var::s: out.m += g * e; break;
          case Var::grad_s_x: out.grad.row(0) += g * e.transpose(); break;
          case Var::grad_s_y: out.grad.row(1) += g * e.transpose(); break;
          case Var::grad_s_z: out.grad.row(2) += g * e.transpose(); break;
          case Var::lap_s: out.lap += g * e; break;
          case Var::u_s: out.u += g * e; break;
        }
      }
      if (!jac) continue;
      const auto grads = variable_gradients(p, e);
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const int a = slot(vars[i]) - slot(Var::grad_s_x);
        const bool is_grad = a >= 0 && a < 3;
        if (!is_grad && vars[i] != Var::lap_s) continue;
        Vec3 spatial = Vec3::Zero();
        for (std::size_t k = 0; k < vars.size(); ++k) spatial += eff_.h(i, k) * grads[slot(vars[k])];
        if (is_grad) {
          out.div_grad += w * spatial[a] * e;
        } else {
          out.grad_lap += w * spatial * e.transpose();
        }
      }
    }
    return out;
  }

 private:
  const CollinearFunctional& f_;
  const AngularGrid& ang_;
  std::vector<double> values_;
  CollinearEval col_;
  EffectiveEval eff_;
};

bool depends_on_gradient_of_s(const VariableSet& vars) {
  return vars.contains(Var::grad_s_x) || vars.contains(Var::grad_s_y) ||
         vars.contains(Var::grad_s_z);
}

std::vector<PointChannels> all_channels(const GridField& field, const CollinearFunctional& f,
                                        const AngularGrid& ang, Level level) {
  std::vector<PointChannels> out(field.size());
  parallel_for(field.size(), [&](std::size_t begin, std::size_t end) {
    DirectionAverager avg(f, ang);
    for (std::size_t i = begin; i < end; ++i) out[i] = avg.channels(field[i], level);
  });
  return out;
}

// Fourth-order central first derivative along axis a of a channel quantity
// re-evaluated from the scene.
template <typename T, typename Eval>
T central_derivative(const GridField& field, const Vec3& r, int a, double h, Eval&& eval) {
  auto at = [&](double step) {
    Vec3 q = r;
    q[a] += step;
    return eval(field.evaluate_at(q));
  };
  const T d = (8.0 * (at(h) - at(-h)) - (at(2.0 * h) - at(-2.0 * h))) / (12.0 * h);
  return d;
}

void require_local(FunctionalId fid, const char* what) {
  if (is_nonlocal(fid)) {
    throw std::invalid_argument(std::string(what) + ": " + std::string(to_string(fid)) +
                                " is non-local; use mc_energy_nonlocal");
  }
}

std::vector<WeightedSpin> projected_spins(const GridField& field, const Vec3& e) {
  std::vector<WeightedSpin> spins(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) spins[i] = {field[i].m.dot(e), field[i].w};
  return spins;
}

}  // namespace

double mc_energy(const GridField& field, const CollinearFunctional& f, const AngularGrid& ang,
                 std::vector<double>* density) {
  std::vector<double> local(field.size());
  parallel_for(field.size(), [&](std::size_t begin, std::size_t end) {
    DirectionAverager avg(f, ang);
    for (std::size_t i = begin; i < end; ++i) local[i] = avg.energy_density(field[i]);
  });
  double energy = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i) energy += field[i].w * local[i];
  if (density) *density = std::move(local);
  return energy;
}

double mc_energy(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                 std::vector<double>* density) {
  require_local(fid, "mc_energy");
  return mc_energy(field, local_functional(fid), ang, density);
}

double mc_energy_nonlocal(const GridField& field, FunctionalId fid, const AngularGrid& ang) {
  if (!is_nonlocal(fid)) {
    throw std::invalid_argument("mc_energy_nonlocal: " + std::string(to_string(fid)) +
                                " is a local functional; use mc_energy");
  }
  if (field.size() > kMaxNonlocalPoints) {
    throw std::invalid_argument("mc_energy_nonlocal: at most 10000 spatial points supported");
  }
  std::vector<double> per_direction(ang.size());
  parallel_for(ang.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t d = begin; d < end; ++d) {
      const auto spins = projected_spins(field, ang.point(d).e);
      per_direction[d] = eval_nonlocal_collinear(fid, spins) + nonlocal_response(fid, spins);
    }
  });
  double energy = 0.0;
  for (std::size_t d = 0; d < ang.size(); ++d) energy += ang.weight(d) * per_direction[d];
  return energy;
}

XCResult mc_potential_channels(const GridField& field, const CollinearFunctional& f,
                               const AngularGrid& ang) {
  const auto ch = all_channels(field, f, ang, Level::channels);
  XCResult r;
  const std::size_t n = field.size();
  r.energy_density.resize(n);
  r.v_n.resize(n);
  r.v_grad_n.resize(n);
  r.v_lap_n.resize(n);
  r.tau_channel.resize(n);
  r.m_channel.resize(n);
  r.grad_channel.resize(n);
  r.lap_channel.resize(n);
  r.u_channel.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.energy_density[i] = ch[i].density;
    r.v_n[i] = ch[i].v_n;
    r.v_grad_n[i] = ch[i].v_grad_n;
    r.v_lap_n[i] = ch[i].v_lap_n;
    r.tau_channel[i] = ch[i].tau;
    r.m_channel[i] = ch[i].m;
    r.grad_channel[i] = ch[i].grad;
    r.lap_channel[i] = ch[i].lap;
    r.u_channel[i] = ch[i].u;
    r.energy += field[i].w * ch[i].density;
  }
  return r;
}

XCResult mc_potential_channels(const GridField& field, FunctionalId fid, const AngularGrid& ang) {
  require_local(fid, "mc_potential_channels");
  return mc_potential_channels(field, local_functional(fid), ang);
}

XCResult mc_evaluate(const GridField& field, const CollinearFunctional& f, const AngularGrid& ang,
                     const BxcOptions& options) {
  const VariableSet& vars = f.variables();
  const bool need_div = depends_on_gradient_of_s(vars);
  const bool need_lap = vars.contains(Var::lap_s);

  bool analytic = false;
  if (need_div) {
    switch (options.mode) {
      case DivergenceMode::analytic:
        if (!field.has_second_derivatives()) {
          throw std::invalid_argument(
              "bxc: field lacks second derivatives and finite differences are disabled");
        }
        analytic = true;
        break;
      case DivergenceMode::finite_difference: analytic = false; break;
      case DivergenceMode::automatic: analytic = field.has_second_derivatives(); break;
    }
    if (!analytic && !field.scene()) {
      throw std::invalid_argument(
          "bxc: finite-difference divergence needs a field sampled from a scene");
    }
  }
  if (need_lap && !field.scene()) {
    throw std::invalid_argument("bxc: the lap s channel needs a field sampled from a scene");
  }
  if (!(options.fd_step > 0.0)) throw std::invalid_argument("bxc: fd_step must be > 0");

  XCResult r = mc_potential_channels(field, f, ang);
  const std::size_t n = field.size();
  r.bxc.resize(n);
  const double h = options.fd_step;
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    DirectionAverager avg(f, ang);
    for (std::size_t i = begin; i < end; ++i) {
      Vec3 b = -r.m_channel[i];
      if (need_div || need_lap) {
        const FieldPoint& p = field[i];
        if (need_div && analytic) b += avg.channels(p, Level::jacobians).div_grad;
        if (need_div && !analytic) {
          for (int a = 0; a < 3; ++a) {
            b += central_derivative<Vec3>(field, p.r, a, h, [&](const FieldPoint& q) -> Vec3 {
              return avg.channels(q, Level::channels).grad.row(a).transpose();
            });
          }
        }
        if (need_lap) {
          for (int a = 0; a < 3; ++a) {
            b -= central_derivative<Vec3>(field, p.r, a, h, [&](const FieldPoint& q) -> Vec3 {
              return avg.channels(q, Level::jacobians).grad_lap.row(a).transpose();
            });
          }
        }
      }
      r.bxc[i] = b;
    }
  });
  r.torque = local_torque(field, r.bxc);
  r.global_torque = global_torque(field, r.torque);
  return r;
}

XCResult mc_evaluate(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                     const BxcOptions& options) {
  require_local(fid, "bxc");
  return mc_evaluate(field, local_functional(fid), ang, options);
}

std::vector<Vec3> bxc(const GridField& field, const CollinearFunctional& f,
                      const AngularGrid& ang, const BxcOptions& options) {
  return mc_evaluate(field, f, ang, options).bxc;
}

std::vector<Vec3> bxc(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                      const BxcOptions& options) {
  return mc_evaluate(field, fid, ang, options).bxc;
}

std::vector<Vec3> local_torque(const GridField& field, const std::vector<Vec3>& bxc_field) {
  if (bxc_field.size() != field.size()) {
    throw std::invalid_argument("local_torque: " + std::to_string(bxc_field.size()) +
                                " field values for " + std::to_string(field.size()) + " points");
  }
  std::vector<Vec3> torque(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) torque[i] = field[i].m.cross(bxc_field[i]);
  return torque;
}

Vec3 global_torque(const GridField& field, const std::vector<Vec3>& torque_field) {
  if (torque_field.size() != field.size()) {
    throw std::invalid_argument("global_torque: size mismatch");
  }
  Vec3 sum = Vec3::Zero();
  for (std::size_t i = 0; i < field.size(); ++i) sum += field[i].w * torque_field[i];
  return sum;
}

double closed_form_mc(const GridField& field, FunctionalId fid) {
  const auto& pts = field.points();
  double e = 0.0;
  switch (fid) {
    case FunctionalId::slater_lsda:
      throw std::invalid_argument(
          "closed_form_mc: slater_lsda has no closed form; use lsda_t_integral_oracle or "
          "locally_collinear_energy");
    case FunctionalId::toy1_gga:
      for (const auto& p : pts) e += p.w * p.grad_m.squaredNorm();
      return e;
    case FunctionalId::toy2_gga:
      for (const auto& p : pts) e += p.w * p.m.dot(p.grad_m.transpose() * p.grad_n);
      return e;
    case FunctionalId::toy3_mgga:
      for (const auto& p : pts) e += p.w * p.m.dot(p.lap_m);
      return e;
    case FunctionalId::toy6_mgga_u:
      for (const auto& p : pts) e += p.w * p.m.dot(p.u);
      return e;
    case FunctionalId::toy4_nonlocal:
    case FunctionalId::toy5_nonlocal:
      break;
  }
  if (pts.size() > kMaxNonlocalPoints) {
    throw std::invalid_argument("closed_form_mc: at most 10000 spatial points supported");
  }
  const bool toy4 = fid == FunctionalId::toy4_nonlocal;
  for (const auto& p : pts) {
    double row = 0.0;
    for (const auto& q : pts) {
      const double dot = p.m.dot(q.m);
      row += q.w * (toy4 ? dot : (2.0 * dot * dot + p.m.squaredNorm() * q.m.squaredNorm()) / 3.0);
    }
    e += p.w * row;
  }
  return e;
}

double locally_collinear_energy(const GridField& field, const CollinearFunctional& f) {
  if (f.variables().contains(Var::lap_s)) {
    throw std::invalid_argument("locally_collinear_energy: " + f.name() +
                                " depends on lap s, whose locally collinear form is ambiguous");
  }
  double e = 0.0;
  std::vector<double> values;
  CollinearEval c;
  for (const auto& p : field.points()) {
    ProjectedPoint q = project(p, Vec3::Zero());
    const double norm = p.m.norm();
    q.m_w = norm;
    if (norm >= kLcThreshold) {
      q.grad_m_w = p.grad_m * p.m / norm;
      q.u_w = p.u.dot(p.m) / norm;
    }
    f.gather(variable_values(q), values);
    f.evaluate(values, 0, c);
    e += p.w * c.f;
  }
  return e;
}

double locally_collinear_energy(const GridField& field, FunctionalId fid) {
  if (!is_nonlocal(fid)) return locally_collinear_energy(field, local_functional(fid));
  std::vector<WeightedSpin> spins(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) spins[i] = {field[i].m.norm(), field[i].w};
  return eval_nonlocal_collinear(fid, spins);
}

double collinear_energy(const GridField& field, const CollinearFunctional& f, const Vec3& axis) {
  double e = 0.0;
  std::vector<double> values;
  CollinearEval c;
  for (const auto& p : field.points()) {
    f.gather(variable_values(project(p, axis)), values);
    f.evaluate(values, 0, c);
    e += p.w * c.f;
  }
  return e;
}

double collinear_energy(const GridField& field, FunctionalId fid, const Vec3& axis) {
  if (!is_nonlocal(fid)) return collinear_energy(field, local_functional(fid), axis);
  return eval_nonlocal_collinear(fid, projected_spins(field, axis));
}

double lsda_t_integral_oracle(double n, double m, const CollinearFunctional& f, int n_t) {
  for (Var v : f.variables().vars()) {
    if (v != Var::n && v != Var::s) {
      throw std::invalid_argument("lsda_t_integral_oracle: " + f.name() +
                                  " depends on more than (n, s)");
    }
  }
  if (n_t < 1) throw std::invalid_argument("lsda_t_integral_oracle: n_t must be >= 1");
  const auto [t, w] = gauss_legendre_rule(n_t, 0.0, 1.0);
  std::vector<double> values;
  double sum = 0.0;
  for (int k = 0; k < n_t; ++k) {
    ProjectedPoint q;
    q.n = n;
    q.m_w = m * t[k];
    f.gather(variable_values(q), values);
    sum += w[k] * effective_integrand(f.evaluate(values, 1), values);
  }
  return sum;
}

double lsda_t_integral_oracle(double n, double m, FunctionalId fid, int n_t) {
  require_local(fid, "lsda_t_integral_oracle");
  return lsda_t_integral_oracle(n, m, local_functional(fid), n_t);
}

}  // namespace mcxc
