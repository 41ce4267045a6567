#pragma once

#include <vector>

#include "mcxc/angular.hpp"
#include "mcxc/effective.hpp"
#include "mcxc/fields.hpp"
#include "mcxc/functionals.hpp"

namespace mcxc {

/// Per-point outputs of the multi-collinear evaluation. Channels are the
/// direction averages of the f_eff partials, each odd one multiplied by e:
///   m_channel          avg df_eff/ds e
///   grad_channel(a, b) avg df_eff/d(d_a s) e_b
///   lap_channel        avg df_eff/d(lap s) e
///   u_channel          avg df_eff/du_s e
/// Empty vectors mean "not computed".
struct XCResult {
  double energy = 0.0;
  std::vector<double> energy_density;

  std::vector<double> v_n;
  std::vector<Vec3> v_grad_n;
  std::vector<double> v_lap_n;
  std::vector<double> tau_channel;
  std::vector<Vec3> m_channel;
  std::vector<Mat3> grad_channel;
  std::vector<Vec3> lap_channel;
  std::vector<Vec3> u_channel;

  std::vector<Vec3> bxc;
  std::vector<Vec3> torque;
  Vec3 global_torque = Vec3::Zero();
};

/// How spatial derivatives of the channels are formed for B^xc.
///  analytic: chain rule through the point's third-order entries.
///  finite_difference: 4th-order central differences of the channels
///    re-evaluated from the field's scene at displaced positions.
///  automatic: analytic when the field carries third-order entries.
/// The Laplacian-channel term always differentiates the analytic channel
/// gradient once more by finite differences, so it needs a scene.
enum class DivergenceMode { automatic, analytic, finite_difference };

struct BxcOptions {
  DivergenceMode mode = DivergenceMode::automatic;
  double fd_step = 2e-3;
};

/// Sum_r w_r Sum_e w_e f_eff(project(r, e)); directions inner, points outer,
/// both accumulated sequentially in index order. `density` receives the
/// per-point direction average when non-null.
double mc_energy(const GridField& field, const CollinearFunctional& f, const AngularGrid& ang,
                 std::vector<double>* density = nullptr);
/// Throws std::invalid_argument for toy4/toy5.
double mc_energy(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                 std::vector<double>* density = nullptr);

/// Direction average of E_col + Sum_i s_i dE_col/ds_i over the projected
/// spins of all points. Throws for local ids and for more than 10^4 points.
double mc_energy_nonlocal(const GridField& field, FunctionalId fid, const AngularGrid& ang);

/// Energy, energy density and every channel; bxc and torque left empty.
XCResult mc_potential_channels(const GridField& field, const CollinearFunctional& f,
                               const AngularGrid& ang);
XCResult mc_potential_channels(const GridField& field, FunctionalId fid, const AngularGrid& ang);

/// B^xc = -dE/dm = -m_channel + div(grad_channel) - lap(lap_channel).
std::vector<Vec3> bxc(const GridField& field, const CollinearFunctional& f,
                      const AngularGrid& ang, const BxcOptions& options = {});
std::vector<Vec3> bxc(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                      const BxcOptions& options = {});

/// m x B pointwise; throws std::invalid_argument on a size mismatch.
std::vector<Vec3> local_torque(const GridField& field, const std::vector<Vec3>& bxc_field);

/// Sum_r w_r torque(r).
Vec3 global_torque(const GridField& field, const std::vector<Vec3>& torque_field);

/// Channels, B^xc, local and global torque in one pass.
XCResult mc_evaluate(const GridField& field, const CollinearFunctional& f, const AngularGrid& ang,
                     const BxcOptions& options = {});
XCResult mc_evaluate(const GridField& field, FunctionalId fid, const AngularGrid& ang,
                     const BxcOptions& options = {});

/// Closed-form multi-collinear energies of the toy functionals, computed
/// directly from m without any angular grid. The non-local forms run the
/// literal double sum over point pairs. Throws for slater_lsda.
double closed_form_mc(const GridField& field, FunctionalId fid);

/// Below this |m| the locally collinear reference drops the terms that need
/// the direction of m.
inline constexpr double kLcThreshold = 1e-12;

/// E_col evaluated at (n, |m|) with grad|m| = (grad m) m/|m| and u_s = u.m/|m|.
/// Throws for functionals depending on lap s (toy3).
double locally_collinear_energy(const GridField& field, FunctionalId fid);
double locally_collinear_energy(const GridField& field, const CollinearFunctional& f);

/// Plain collinear energy with every spin channel projected onto `axis`.
double collinear_energy(const GridField& field, const CollinearFunctional& f,
                        const Vec3& axis = Vec3::UnitZ());
double collinear_energy(const GridField& field, FunctionalId fid,
                        const Vec3& axis = Vec3::UnitZ());

/// Int_0^1 f_eff(n, m t) dt by n_t-point Gauss-Legendre, for integrands of
/// (n, s) only. Throws for other functionals or n_t < 1.
double lsda_t_integral_oracle(double n, double m, const CollinearFunctional& f, int n_t);
double lsda_t_integral_oracle(double n, double m, FunctionalId fid, int n_t);

}  // namespace mcxc
