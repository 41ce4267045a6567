#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcxc/fields.hpp"

namespace mcxc {

/// Scalar inputs of a collinear integrand. The first six are even under
/// time reversal (kappa), the last six odd (chi); s is the projected
/// magnetization m.e.
enum class Var : int {
  n = 0,
  grad_n_x,
  grad_n_y,
  grad_n_z,
  lap_n,
  tau,
  s,
  grad_s_x,
  grad_s_y,
  grad_s_z,
  lap_s,
  u_s,
};

inline constexpr int kVarCount = 12;

constexpr bool is_odd(Var v) { return static_cast<int>(v) >= static_cast<int>(Var::s); }
std::string_view to_string(Var v);

/// Value of every Var at a projected point, indexed by Var.
std::array<double, kVarCount> variable_values(const ProjectedPoint& p);

/// Spatial gradient d_a Y of every Var Y along direction e, indexed by Var.
/// Uses the third-order entries of the point.
std::array<Vec3, kVarCount> variable_gradients(const FieldPoint& p, const Vec3& e);

/// Ordered set of variables an integrand depends on.
class VariableSet {
 public:
  VariableSet() = default;
  /// Throws std::invalid_argument on duplicates or an empty list.
  explicit VariableSet(std::vector<Var> vars);

  std::size_t size() const { return vars_.size(); }
  Var operator[](std::size_t i) const { return vars_[i]; }
  const std::vector<Var>& vars() const { return vars_; }
  bool odd(std::size_t i) const { return is_odd(vars_[i]); }
  /// Local index of v, or -1.
  int index_of(Var v) const { return slot_[static_cast<int>(v)]; }
  bool contains(Var v) const { return index_of(v) >= 0; }

  /// Sorted union.
  static VariableSet merge(const VariableSet& a, const VariableSet& b);

 private:
  std::vector<Var> vars_;
  std::array<int, kVarCount> slot_{-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1};
};

/// f and its partials up to `order` with respect to the variables of `vars`.
/// Derivative tensors are dense over the local variable indices.
struct CollinearEval {
  VariableSet vars;
  int order = 0;
  double f = 0.0;
  std::vector<double> d1;
  std::vector<double> d2;
  std::vector<double> d3;
  /// Set when an input had to be moved back into the integrand's domain.
  bool clamped = false;

  void reset(const VariableSet& v, int order);
  std::size_t size() const { return vars.size(); }
  double& g(std::size_t i) { return d1[i]; }
  double& h(std::size_t i, std::size_t j) { return d2[i * size() + j]; }
  double& t(std::size_t i, std::size_t j, std::size_t k) { return d3[(i * size() + j) * size() + k]; }
  double g(std::size_t i) const { return d1[i]; }
  double h(std::size_t i, std::size_t j) const { return d2[i * size() + j]; }
  double t(std::size_t i, std::size_t j, std::size_t k) const {
    return d3[(i * size() + j) * size() + k];
  }
  /// Partial by variable name; zero when the variable is absent.
  double d(Var a) const;
  double d(Var a, Var b) const;
  double d(Var a, Var b, Var c) const;
};

/// Pointwise collinear integrand f(kappa, chi).
class CollinearFunctional {
 public:
  virtual ~CollinearFunctional() = default;
  virtual std::string name() const = 0;
  virtual const VariableSet& variables() const = 0;
  /// Evaluates at `values` (one entry per variables() slot) up to `order`
  /// (0..3) into `out`.
  virtual void evaluate(std::span<const double> values, int order, CollinearEval& out) const = 0;
  /// k when f is homogeneous of degree k in the chi variables.
  virtual std::optional<int> chi_degree() const { return std::nullopt; }

  CollinearEval evaluate(std::span<const double> values, int order) const {
    CollinearEval out;
    evaluate(values, order, out);
    return out;
  }
  /// Gathers this functional's inputs from a projected point.
  std::vector<double> gather(const ProjectedPoint& p) const;
  void gather(const std::array<double, kVarCount>& all, std::vector<double>& out) const;
};

enum class FunctionalId {
  slater_lsda,
  toy1_gga,
  toy2_gga,
  toy3_mgga,
  toy6_mgga_u,
  toy4_nonlocal,
  toy5_nonlocal,
};

std::string_view to_string(FunctionalId id);
FunctionalId functional_from_string(std::string_view name);
std::vector<FunctionalId> all_functionals();
bool is_nonlocal(FunctionalId id);

/// Registry member for a local id; throws std::invalid_argument for toy4/toy5.
const CollinearFunctional& local_functional(FunctionalId id);

/// Conventional exchange prefactor (3/4)(3/pi)^(1/3).
double slater_cx();

CollinearEval eval_collinear(FunctionalId id, const ProjectedPoint& p, int order);

/// Projected spin value s_i with spatial weight w_i.
struct WeightedSpin {
  double s;
  double w;
};

/// Discretized double integral: toy4 sum_ij s_i s_j w_i w_j,
/// toy5 sum_ij (s_i s_j)^2 w_i w_j.
double eval_nonlocal_collinear(FunctionalId id, std::span<const WeightedSpin> spins);

/// sum_i s_i dE/ds_i for the same discretized functional.
double nonlocal_response(FunctionalId id, std::span<const WeightedSpin> spins);

/// Combinators over collinear functionals.
std::shared_ptr<const CollinearFunctional> linear_combination(
    double a, std::shared_ptr<const CollinearFunctional> fa, double b,
    std::shared_ptr<const CollinearFunctional> fb);
std::shared_ptr<const CollinearFunctional> shifted(std::shared_ptr<const CollinearFunctional> f,
                                                   double constant);
/// f(kappa, 0): the spin-independent part of f, same variable set.
std::shared_ptr<const CollinearFunctional> spin_independent_part(
    std::shared_ptr<const CollinearFunctional> f);
/// Non-owning handle to a registry functional.
std::shared_ptr<const CollinearFunctional> shared_local_functional(FunctionalId id);

}  // namespace mcxc
