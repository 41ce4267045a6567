#include "mcxc/effective.hpp"

#include <stdexcept>
#include <string>

namespace mcxc {

namespace {

void require(const CollinearEval& c, std::span<const double> values, int order) {
  if (c.order < order) {
    throw std::invalid_argument("effective transform needs collinear partials of order " +
                                std::to_string(order) + ", got order " + std::to_string(c.order));
  }
  if (values.size() != c.size()) {
    throw std::invalid_argument("effective transform: " + std::to_string(values.size()) +
                                " values for " + std::to_string(c.size()) + " variables");
  }
}

double chi(const CollinearEval& c, std::span<const double> values, std::size_t j) {
  return c.vars.odd(j) ? values[j] : 0.0;
}

}  // namespace

double EffectiveEval::d(Var a) const {
  const int i = vars.index_of(a);
  return i < 0 ? 0.0 : g(i);
}

double EffectiveEval::d(Var a, Var b) const {
  const int i = vars.index_of(a), j = vars.index_of(b);
  return (i < 0 || j < 0) ? 0.0 : h(i, j);
}

double effective_integrand(const CollinearEval& c, std::span<const double> values) {
  require(c, values, 1);
  double f = c.f;
  for (std::size_t j = 0; j < c.size(); ++j) f += chi(c, values, j) * c.g(j);
  return f;
}

std::vector<double> effective_first_derivs(const CollinearEval& c,
                                           std::span<const double> values) {
  require(c, values, 2);
  const std::size_t k = c.size();
  std::vector<double> d1(k);
  for (std::size_t i = 0; i < k; ++i) {
    double v = c.vars.odd(i) ? 2.0 * c.g(i) : c.g(i);
    for (std::size_t j = 0; j < k; ++j) v += chi(c, values, j) * c.h(i, j);
    d1[i] = v;
  }
  return d1;
}

std::vector<double> effective_second_derivs(const CollinearEval& c,
                                            std::span<const double> values) {
  require(c, values, 3);
  const std::size_t k = c.size();
  std::vector<double> d2(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const double prefactor = 1.0 + (c.vars.odd(i) ? 1.0 : 0.0) + (c.vars.odd(l) ? 1.0 : 0.0);
      double v = prefactor * c.h(i, l);
      for (std::size_t j = 0; j < k; ++j) v += chi(c, values, j) * c.t(i, l, j);
      d2[i * k + l] = v;
    }
  }
  return d2;
}

void effective_eval(const CollinearEval& c, std::span<const double> values, int order,
                    EffectiveEval& out) {
  if (order < 0 || order > 2) {
    throw std::invalid_argument("effective partials are available up to order 2, requested " +
                                std::to_string(order));
  }
  if (out.vars.vars() != c.vars.vars()) out.vars = c.vars;
  out.order = order;
  out.f = effective_integrand(c, values);
  if (order >= 1) {
    out.d1 = effective_first_derivs(c, values);
  } else {
    out.d1.clear();
  }
  if (order >= 2) {
    out.d2 = effective_second_derivs(c, values);
  } else {
    out.d2.clear();
  }
}

EffectiveEval effective_eval(const CollinearEval& c, std::span<const double> values, int order) {
  EffectiveEval out;
  effective_eval(c, values, order, out);
  return out;
}

EffectiveEval effective_eval(const CollinearFunctional& f, std::span<const double> values,
                             int order) {
  return effective_eval(f.evaluate(values, order + 1), values, order);
}

}  // namespace mcxc
