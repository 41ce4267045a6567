#include "mcxc/commands.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "mcxc/engine.hpp"

namespace mcxc {

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string describe(const AngularSpec& a) {
  switch (a.scheme) {
    case AngularScheme::Lebedev: return fmt::format("lebedev:{}", a.order);
    case AngularScheme::GaussLegendre: return fmt::format("gauss_legendre:{}x{}", a.n_theta, a.n_phi);
    case AngularScheme::Fibonacci: return fmt::format("fibonacci:{}", a.n);
  }
  return "unknown";
}

void header(std::ostream& out, std::string_view command, const RunConfig& c,
            std::string_view extra = {}) {
  out << "# " << kCsvVersion << " command=" << command << " scene=" << c.scene_name;
  for (const auto& [key, values] : c.scene_params) {
    out << " scene." << key << "=";
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << num(values[i]);
  }
  out << " functional=" << to_string(c.functional) << " angular=" << describe(c.angular)
      << " n_per_axis=" << c.n_per_axis << " box=" << num(c.box.lo.x()) << ","
      << num(c.box.lo.y()) << "," << num(c.box.lo.z()) << ":" << num(c.box.hi.x()) << ","
      << num(c.box.hi.y()) << "," << num(c.box.hi.z());
  if (!extra.empty()) out << " " << extra;
  out << "\n";
}

GridField build_field(const RunConfig& c) {
  return sample(make_scene(c.scene_name, c.scene_params), c.box, c.n_per_axis);
}

double energy_of(const GridField& field, FunctionalId fid, const AngularGrid& ang) {
  return is_nonlocal(fid) ? mc_energy_nonlocal(field, fid, ang) : mc_energy(field, fid, ang);
}

bool is_n_s_only(FunctionalId fid) {
  if (is_nonlocal(fid)) return false;
  for (Var v : local_functional(fid).variables().vars()) {
    if (v != Var::n && v != Var::s) return false;
  }
  return true;
}

double t_integral_energy(const GridField& field, FunctionalId fid, int n_t) {
  double e = 0.0;
  for (const auto& p : field.points()) e += p.w * lsda_t_integral_oracle(p.n, p.m.norm(), fid, n_t);
  return e;
}

bool has_lc_reference(FunctionalId fid) { return fid != FunctionalId::toy3_mgga; }
bool has_closed_form(FunctionalId fid) { return fid != FunctionalId::slater_lsda; }

}  // namespace

std::vector<SpinRotation> random_rotations(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<SpinRotation> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double u1 = uniform(), u2 = uniform(), u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    const double t2 = 2.0 * std::numbers::pi * u2, t3 = 2.0 * std::numbers::pi * u3;
    out.push_back(SpinRotation::from_quaternion(b * std::cos(t3), a * std::sin(t2),
                                                a * std::cos(t2), b * std::sin(t3)));
  }
  return out;
}

void cmd_energy(const RunConfig& c, std::ostream& out) {
  const GridField field = build_field(c);
  const AngularGrid ang = c.angular.build();
  const FunctionalId fid = c.functional;
  header(out, "energy", c);
  out << "quantity,value\n";
  const double e_mc = energy_of(field, fid, ang);
  out << "e_mc," << num(e_mc) << "\n";
  if (has_lc_reference(fid)) {
    const double e_lc = locally_collinear_energy(field, fid);
    out << "e_lc," << num(e_lc) << "\n";
    out << "mc_minus_lc," << num(e_mc - e_lc) << "\n";
  }
  if (has_closed_form(fid)) {
    const double e_cf = closed_form_mc(field, fid);
    out << "e_closed_form," << num(e_cf) << "\n";
    out << "mc_minus_closed_form," << num(e_mc - e_cf) << "\n";
  }
  if (is_n_s_only(fid)) {
    const double e_t = t_integral_energy(field, fid, c.t_points);
    out << "e_t_integral," << num(e_t) << "\n";
    out << "mc_minus_t_integral," << num(e_mc - e_t) << "\n";
  }
}

void cmd_convergence(const RunConfig& c, std::ostream& out) {
  const GridField field = build_field(c);
  const FunctionalId fid = c.functional;
  double reference = 0.0;
  std::string ref_name;
  if (has_closed_form(fid)) {
    reference = closed_form_mc(field, fid);
    ref_name = "closed_form";
  } else if (is_n_s_only(fid)) {
    reference = t_integral_energy(field, fid, c.t_points);
    ref_name = fmt::format("t_integral:{}", c.t_points);
  } else {
    throw std::invalid_argument("convergence: no reference energy for " +
                                std::string(to_string(fid)));
  }

  std::vector<AngularSpec> sweep;
  std::vector<int> orders = c.lebedev_orders;
  if (orders.empty() && c.gauss_legendre_n_theta.empty() && c.fibonacci_n.empty()) {
    const auto all = lebedev_orders();
    orders.assign(all.begin(), all.end());
  }
  for (int o : orders) sweep.push_back({.scheme = AngularScheme::Lebedev, .order = o});
  for (int nt : c.gauss_legendre_n_theta) {
    sweep.push_back({.scheme = AngularScheme::GaussLegendre, .n_theta = nt, .n_phi = 2 * nt});
  }
  for (int n : c.fibonacci_n) sweep.push_back({.scheme = AngularScheme::Fibonacci, .n = n});

  header(out, "convergence", c, "reference=" + ref_name + " e_reference=" + num(reference));
  out << "scheme,n_points,abs_error\n";
  for (const auto& spec : sweep) {
    const AngularGrid ang = spec.build();
    const double e = energy_of(field, fid, ang);
    out << to_string(spec.scheme) << "," << ang.size() << "," << num(std::abs(e - reference))
        << "\n";
  }
}

void cmd_rotation_scan(const RunConfig& c, std::ostream& out) {
  const GridField field = build_field(c);
  const AngularGrid ang = c.angular.build();
  const FunctionalId fid = c.functional;
  std::vector<SpinRotation> rotations;
  if (c.rotation_kind == RotationKind::octahedral) {
    rotations = octahedral_rotations();
  } else {
    rotations.emplace_back();
    for (const auto& r : random_rotations(c.rotation_count, c.rotation_seed)) rotations.push_back(r);
  }
  const double e0 = energy_of(field, fid, ang);
  header(out, "rotation", c,
         fmt::format("kind={} count={} seed={} e_reference={}",
                     c.rotation_kind == RotationKind::octahedral ? "octahedral" : "random",
                     rotations.size(), c.rotation_seed, num(e0)));
  out << "rotation,abs_delta_e\n";
  for (std::size_t i = 0; i < rotations.size(); ++i) {
    const double e = energy_of(rotate_spin(field, rotations[i]), fid, ang);
    out << i << "," << num(std::abs(e - e0)) << "\n";
  }
}

void cmd_torque_map(const RunConfig& c, std::ostream& out) {
  if (is_nonlocal(c.functional)) {
    throw std::invalid_argument("torque: non-local functionals have no pointwise B^xc");
  }
  const GridField field = build_field(c);
  const XCResult r = mc_evaluate(field, c.functional, c.angular.build());
  header(out, "torque", c);
  out << "x,y,z,m_x,m_y,m_z,bxc_x,bxc_y,bxc_z,torque_x,torque_y,torque_z\n";
  auto vec = [](const Vec3& v) { return num(v.x()) + "," + num(v.y()) + "," + num(v.z()); };
  for (std::size_t i = 0; i < field.size(); ++i) {
    out << vec(field[i].r) << "," << vec(field[i].m) << "," << vec(r.bxc[i]) << ","
        << vec(r.torque[i]) << "\n";
  }
  out << "global_torque,,,,,,,,," << vec(r.global_torque) << "\n";
}

void run_command(std::string_view command, const RunConfig& config, std::ostream& out) {
  if (command == "energy") return cmd_energy(config, out);
  if (command == "convergence") return cmd_convergence(config, out);
  if (command == "rotation") return cmd_rotation_scan(config, out);
  if (command == "torque") return cmd_torque_map(config, out);
  throw std::invalid_argument("unknown command '" + std::string(command) +
                              "'; expected energy, convergence, rotation or torque");
}

}  // namespace mcxc
