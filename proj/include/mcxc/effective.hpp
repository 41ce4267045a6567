#pragma once

#include <span>
#include <vector>

#include "mcxc/functionals.hpp"

namespace mcxc {

/// f_eff = f + sum_j chi_j df/dchi_j and its partials, over the same local
/// variables as the collinear evaluation it came from.
struct EffectiveEval {
  VariableSet vars;
  int order = 0;
  double f = 0.0;
  std::vector<double> d1;
  std::vector<double> d2;

  std::size_t size() const { return vars.size(); }
  double g(std::size_t i) const { return d1[i]; }
  double h(std::size_t i, std::size_t j) const { return d2[i * size() + j]; }
  double d(Var a) const;
  double d(Var a, Var b) const;
};

/// `values` holds one entry per variable of c (the same inputs c was
/// evaluated at); only the odd ones enter. Each call throws
/// std::invalid_argument when c was evaluated below the needed order
/// (1, 2 and 3 respectively).
double effective_integrand(const CollinearEval& c, std::span<const double> values);
std::vector<double> effective_first_derivs(const CollinearEval& c, std::span<const double> values);
std::vector<double> effective_second_derivs(const CollinearEval& c, std::span<const double> values);

/// f_eff with partials up to `order` (0..2); c must carry order + 1.
EffectiveEval effective_eval(const CollinearEval& c, std::span<const double> values, int order);
void effective_eval(const CollinearEval& c, std::span<const double> values, int order,
                    EffectiveEval& out);

/// Evaluates f at `values` to order + 1 and transforms.
EffectiveEval effective_eval(const CollinearFunctional& f, std::span<const double> values,
                             int order);

}  // namespace mcxc
