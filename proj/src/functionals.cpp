#include "mcxc/functionals.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mcxc {

namespace {

constexpr std::array<std::string_view, kVarCount> kVarNames = {
    "n", "grad_n_x", "grad_n_y", "grad_n_z", "lap_n", "tau",
    "s", "grad_s_x", "grad_s_y", "grad_s_z", "lap_s", "u_s"};

void set2(CollinearEval& out, std::size_t i, std::size_t j, double v) {
  out.h(i, j) = v;
  out.h(j, i) = v;
}

void set3(CollinearEval& out, std::size_t i, std::size_t j, std::size_t k, double v) {
  out.t(i, j, k) = v;
  out.t(i, k, j) = v;
  out.t(j, i, k) = v;
  out.t(j, k, i) = v;
  out.t(k, i, j) = v;
  out.t(k, j, i) = v;
}

void check_order(int order) {
  if (order < 0 || order > 3) {
    throw std::invalid_argument("collinear partials are available up to order 3, requested " +
                                std::to_string(order));
  }
}

void check_arity(const CollinearFunctional& f, std::span<const double> values) {
  if (values.size() != f.variables().size()) {
    throw std::invalid_argument(f.name() + ": expected " + std::to_string(f.variables().size()) +
                                " inputs, got " + std::to_string(values.size()));
  }
}

// -C [(n+s)^(4/3) + (n-s)^(4/3)], s clamped to [-n, n].
class SlaterLsda final : public CollinearFunctional {
 public:
  std::string name() const override { return "slater_lsda"; }
  const VariableSet& variables() const override { return vars_; }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    check_order(order);
    check_arity(*this, values);
    out.reset(vars_, order);
    const double n = std::max(values[0], 0.0);
    double s = values[1];
    if (std::abs(s) > n) {
      s = std::copysign(n, s);
      out.clamped = true;
    }
    const double cx = slater_cx();
    const Powers a = powers(n + s), b = powers(n - s);
    out.f = -cx * (a.p[0] + b.p[0]);
    if (order < 1) return;
    out.g(0) = -cx * (a.p[1] + b.p[1]);
    out.g(1) = -cx * (a.p[1] - b.p[1]);
    if (order < 2) return;
    set2(out, 0, 0, -cx * (a.p[2] + b.p[2]));
    set2(out, 0, 1, -cx * (a.p[2] - b.p[2]));
    set2(out, 1, 1, -cx * (a.p[2] + b.p[2]));
    if (order < 3) return;
    const double even = -cx * (a.p[3] + b.p[3]);
    const double odd = -cx * (a.p[3] - b.p[3]);
    set3(out, 0, 0, 0, even);
    set3(out, 0, 0, 1, odd);
    set3(out, 0, 1, 1, even);
    set3(out, 1, 1, 1, odd);
  }

 private:
  struct Powers {
    std::array<double, 4> p;
  };

  // x^(4/3) and its first three derivatives; zero outside x > 0.
  static Powers powers(double x) {
    if (!(x > 0.0)) return {{0.0, 0.0, 0.0, 0.0}};
    const double c = std::cbrt(x);
    return {{x * c, 4.0 / 3.0 * c, 4.0 / 9.0 / (c * c), -8.0 / 27.0 / (x * c * c)}};
  }

  VariableSet vars_{{Var::n, Var::s}};
};

// grad s . grad s
class Toy1Gga final : public CollinearFunctional {
 public:
  std::string name() const override { return "toy1_gga"; }
  const VariableSet& variables() const override { return vars_; }
  std::optional<int> chi_degree() const override { return 2; }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    check_order(order);
    check_arity(*this, values);
    out.reset(vars_, order);
    out.f = values[0] * values[0] + values[1] * values[1] + values[2] * values[2];
    if (order < 1) return;
    for (int a = 0; a < 3; ++a) out.g(a) = 2.0 * values[a];
    if (order < 2) return;
    for (int a = 0; a < 3; ++a) out.h(a, a) = 2.0;
  }

 private:
  VariableSet vars_{{Var::grad_s_x, Var::grad_s_y, Var::grad_s_z}};
};

// s (grad n . grad s)
class Toy2Gga final : public CollinearFunctional {
 public:
  std::string name() const override { return "toy2_gga"; }
  const VariableSet& variables() const override { return vars_; }
  std::optional<int> chi_degree() const override { return 2; }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    check_order(order);
    check_arity(*this, values);
    out.reset(vars_, order);
    const double s = values[3];
    double dot = 0.0;
    for (int a = 0; a < 3; ++a) dot += values[a] * values[4 + a];
    out.f = s * dot;
    if (order < 1) return;
    for (int a = 0; a < 3; ++a) {
      out.g(a) = s * values[4 + a];
      out.g(4 + a) = s * values[a];
    }
    out.g(3) = dot;
    if (order < 2) return;
    for (int a = 0; a < 3; ++a) {
      set2(out, a, 3, values[4 + a]);
      set2(out, a, 4 + a, s);
      set2(out, 3, 4 + a, values[a]);
    }
    if (order < 3) return;
    for (int a = 0; a < 3; ++a) set3(out, a, 3, 4 + a, 1.0);
  }

 private:
  VariableSet vars_{{Var::grad_n_x, Var::grad_n_y, Var::grad_n_z, Var::s, Var::grad_s_x,
                     Var::grad_s_y, Var::grad_s_z}};
};

// Bilinear s * y for a second odd variable y (lap s or u_s).
class BilinearSpin final : public CollinearFunctional {
 public:
  BilinearSpin(std::string name, Var partner) : name_(std::move(name)), vars_({Var::s, partner}) {}
  std::string name() const override { return name_; }
  const VariableSet& variables() const override { return vars_; }
  std::optional<int> chi_degree() const override { return 2; }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    check_order(order);
    check_arity(*this, values);
    out.reset(vars_, order);
    out.f = values[0] * values[1];
    if (order < 1) return;
    out.g(0) = values[1];
    out.g(1) = values[0];
    if (order < 2) return;
    set2(out, 0, 1, 1.0);
  }

 private:
  std::string name_;
  VariableSet vars_;
};

// Maps a child's local variable slots into the slots of an enclosing set.
std::vector<std::size_t> slot_map(const VariableSet& child, const VariableSet& parent) {
  std::vector<std::size_t> map(child.size());
  for (std::size_t i = 0; i < child.size(); ++i) map[i] = parent.index_of(child[i]);
  return map;
}

class LinearCombination final : public CollinearFunctional {
 public:
  LinearCombination(double a, std::shared_ptr<const CollinearFunctional> fa, double b,
                    std::shared_ptr<const CollinearFunctional> fb)
      : terms_{Term{a, std::move(fa), {}}, Term{b, std::move(fb), {}}},
        vars_(VariableSet::merge(terms_[0].f->variables(), terms_[1].f->variables())) {
    for (auto& t : terms_) t.map = slot_map(t.f->variables(), vars_);
  }

  std::string name() const override {
    return "lincomb(" + terms_[0].f->name() + "," + terms_[1].f->name() + ")";
  }
  const VariableSet& variables() const override { return vars_; }
  std::optional<int> chi_degree() const override {
    auto da = terms_[0].f->chi_degree(), db = terms_[1].f->chi_degree();
    if (da && db && *da == *db) return da;
    return std::nullopt;
  }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    check_order(order);
    check_arity(*this, values);
    out.reset(vars_, order);
    CollinearEval part;
    std::vector<double> sub;
    for (const auto& term : terms_) {
      sub.resize(term.map.size());
      for (std::size_t i = 0; i < sub.size(); ++i) sub[i] = values[term.map[i]];
      term.f->evaluate(sub, order, part);
      out.clamped = out.clamped || part.clamped;
      const double c = term.coefficient;
      const auto& m = term.map;
      const std::size_t k = m.size();
      out.f += c * part.f;
      for (std::size_t i = 0; i < k && order >= 1; ++i) {
        out.g(m[i]) += c * part.g(i);
        for (std::size_t j = 0; j < k && order >= 2; ++j) {
          out.h(m[i], m[j]) += c * part.h(i, j);
          for (std::size_t l = 0; l < k && order >= 3; ++l) {
            out.t(m[i], m[j], m[l]) += c * part.t(i, j, l);
          }
        }
      }
    }
  }

 private:
  struct Term {
    double coefficient;
    std::shared_ptr<const CollinearFunctional> f;
    std::vector<std::size_t> map;
  };
  std::array<Term, 2> terms_;
  VariableSet vars_;
};

class Shifted final : public CollinearFunctional {
 public:
  Shifted(std::shared_ptr<const CollinearFunctional> f, double c) : f_(std::move(f)), c_(c) {}
  std::string name() const override { return f_->name() + "+const"; }
  const VariableSet& variables() const override { return f_->variables(); }
  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    f_->evaluate(values, order, out);
    out.f += c_;
  }

 private:
  std::shared_ptr<const CollinearFunctional> f_;
  double c_;
};

class SpinIndependentPart final : public CollinearFunctional {
 public:
  explicit SpinIndependentPart(std::shared_ptr<const CollinearFunctional> f) : f_(std::move(f)) {}
  std::string name() const override { return f_->name() + "@chi=0"; }
  const VariableSet& variables() const override { return f_->variables(); }
  std::optional<int> chi_degree() const override { return 0; }

  void evaluate(std::span<const double> values, int order, CollinearEval& out) const override {
    const VariableSet& vars = f_->variables();
    std::vector<double> even(values.begin(), values.end());
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars.odd(i)) even[i] = 0.0;
    f_->evaluate(even, order, out);
    const std::size_t k = vars.size();
    for (std::size_t i = 0; i < k && order >= 1; ++i) {
      if (vars.odd(i)) out.g(i) = 0.0;
      for (std::size_t j = 0; j < k && order >= 2; ++j) {
        if (vars.odd(i) || vars.odd(j)) out.h(i, j) = 0.0;
        for (std::size_t l = 0; l < k && order >= 3; ++l) {
          if (vars.odd(i) || vars.odd(j) || vars.odd(l)) out.t(i, j, l) = 0.0;
        }
      }
    }
  }

 private:
  std::shared_ptr<const CollinearFunctional> f_;
};

const SlaterLsda kSlater;
const Toy1Gga kToy1;
const Toy2Gga kToy2;
const BilinearSpin kToy3("toy3_mgga", Var::lap_s);
const BilinearSpin kToy6("toy6_mgga_u", Var::u_s);

}  // namespace

std::string_view to_string(Var v) { return kVarNames[static_cast<int>(v)]; }

std::array<double, kVarCount> variable_values(const ProjectedPoint& p) {
  return {p.n,   p.grad_n.x(),   p.grad_n.y(),   p.grad_n.z(),   p.lap_n,   p.tau,
          p.m_w, p.grad_m_w.x(), p.grad_m_w.y(), p.grad_m_w.z(), p.lap_m_w, p.u_w};
}

std::array<Vec3, kVarCount> variable_gradients(const FieldPoint& p, const Vec3& e) {
  std::array<Vec3, kVarCount> g;
  g[static_cast<int>(Var::n)] = p.grad_n;
  for (int c = 0; c < 3; ++c) g[static_cast<int>(Var::grad_n_x) + c] = p.hess_n.col(c);
  g[static_cast<int>(Var::lap_n)] = p.grad_lap_n;
  g[static_cast<int>(Var::tau)] = p.grad_tau;
  g[static_cast<int>(Var::s)] = p.grad_m * e;
  const Mat3 hess_e = e.x() * p.hess_m[0] + e.y() * p.hess_m[1] + e.z() * p.hess_m[2];
  for (int c = 0; c < 3; ++c) g[static_cast<int>(Var::grad_s_x) + c] = hess_e.col(c);
  g[static_cast<int>(Var::lap_s)] = p.grad_lap_m * e;
  g[static_cast<int>(Var::u_s)] = p.grad_u * e;
  return g;
}

VariableSet::VariableSet(std::vector<Var> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("variable set must not be empty");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    int& slot = slot_[static_cast<int>(vars_[i])];
    if (slot >= 0) {
      throw std::invalid_argument("variable '" + std::string(to_string(vars_[i])) +
                                  "' listed twice");
    }
    slot = static_cast<int>(i);
  }
}

VariableSet VariableSet::merge(const VariableSet& a, const VariableSet& b) {
  std::vector<Var> vars;
  for (int i = 0; i < kVarCount; ++i) {
    const Var v = static_cast<Var>(i);
    if (a.contains(v) || b.contains(v)) vars.push_back(v);
  }
  return VariableSet(std::move(vars));
}

void CollinearEval::reset(const VariableSet& v, int order_) {
  if (vars.vars() != v.vars()) vars = v;
  order = order_;
  f = 0.0;
  clamped = false;
  const std::size_t k = v.size();
  d1.assign(order_ >= 1 ? k : 0, 0.0);
  d2.assign(order_ >= 2 ? k * k : 0, 0.0);
  d3.assign(order_ >= 3 ? k * k * k : 0, 0.0);
}

double CollinearEval::d(Var a) const {
  const int i = vars.index_of(a);
  return i < 0 ? 0.0 : g(i);
}

double CollinearEval::d(Var a, Var b) const {
  const int i = vars.index_of(a), j = vars.index_of(b);
  return (i < 0 || j < 0) ? 0.0 : h(i, j);
}

double CollinearEval::d(Var a, Var b, Var c) const {
  const int i = vars.index_of(a), j = vars.index_of(b), k = vars.index_of(c);
  return (i < 0 || j < 0 || k < 0) ? 0.0 : t(i, j, k);
}

std::vector<double> CollinearFunctional::gather(const ProjectedPoint& p) const {
  std::vector<double> out;
  gather(variable_values(p), out);
  return out;
}

void CollinearFunctional::gather(const std::array<double, kVarCount>& all,
                                 std::vector<double>& out) const {
  const VariableSet& vars = variables();
  out.resize(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) out[i] = all[static_cast<int>(vars[i])];
}

std::string_view to_string(FunctionalId id) {
  switch (id) {
    case FunctionalId::slater_lsda: return "slater_lsda";
    case FunctionalId::toy1_gga: return "toy1_gga";
    case FunctionalId::toy2_gga: return "toy2_gga";
    case FunctionalId::toy3_mgga: return "toy3_mgga";
    case FunctionalId::toy6_mgga_u: return "toy6_mgga_u";
    case FunctionalId::toy4_nonlocal: return "toy4_nonlocal";
    case FunctionalId::toy5_nonlocal: return "toy5_nonlocal";
  }
  return "unknown";
}

std::vector<FunctionalId> all_functionals() {
  return {FunctionalId::slater_lsda,   FunctionalId::toy1_gga,      FunctionalId::toy2_gga,
          FunctionalId::toy3_mgga,     FunctionalId::toy6_mgga_u,   FunctionalId::toy4_nonlocal,
          FunctionalId::toy5_nonlocal};
}

FunctionalId functional_from_string(std::string_view name) {
  std::string known;
  for (FunctionalId id : all_functionals()) {
    if (to_string(id) == name) return id;
    known += " ";
    known += to_string(id);
  }
  throw std::invalid_argument("unknown functional '" + std::string(name) +
                              "'; known functionals:" + known);
}

bool is_nonlocal(FunctionalId id) {
  return id == FunctionalId::toy4_nonlocal || id == FunctionalId::toy5_nonlocal;
}

const CollinearFunctional& local_functional(FunctionalId id) {
  switch (id) {
    case FunctionalId::slater_lsda: return kSlater;
    case FunctionalId::toy1_gga: return kToy1;
    case FunctionalId::toy2_gga: return kToy2;
    case FunctionalId::toy3_mgga: return kToy3;
    case FunctionalId::toy6_mgga_u: return kToy6;
    default: break;
  }
  throw std::invalid_argument(std::string(to_string(id)) +
                              " is a non-local (point-pair) functional; use the non-local evaluators");
}

std::shared_ptr<const CollinearFunctional> shared_local_functional(FunctionalId id) {
  return std::shared_ptr<const CollinearFunctional>(&local_functional(id),
                                                    [](const CollinearFunctional*) {});
}

double slater_cx() { return 0.75 * std::cbrt(3.0 / std::numbers::pi); }

CollinearEval eval_collinear(FunctionalId id, const ProjectedPoint& p, int order) {
  const CollinearFunctional& f = local_functional(id);
  return f.evaluate(f.gather(p), order);
}

// Both double sums factorize: toy4 = (sum s w)^2, toy5 = (sum s^2 w)^2.
double eval_nonlocal_collinear(FunctionalId id, std::span<const WeightedSpin> spins) {
  if (!is_nonlocal(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " is not a non-local functional");
  }
  if (spins.empty()) throw std::invalid_argument("non-local functional needs at least one point");
  double sum = 0.0;
  for (const auto& [s, w] : spins) sum += (id == FunctionalId::toy4_nonlocal ? s : s * s) * w;
  return sum * sum;
}

double nonlocal_response(FunctionalId id, std::span<const WeightedSpin> spins) {
  if (!is_nonlocal(id)) {
    throw std::invalid_argument(std::string(to_string(id)) + " is not a non-local functional");
  }
  double sum = 0.0, response = 0.0;
  if (id == FunctionalId::toy4_nonlocal) {
    for (const auto& [s, w] : spins) sum += s * w;
    for (const auto& [s, w] : spins) response += s * (2.0 * w * sum);
  } else {
    for (const auto& [s, w] : spins) sum += s * s * w;
    for (const auto& [s, w] : spins) response += s * (4.0 * s * w * sum);
  }
  return response;
}

std::shared_ptr<const CollinearFunctional> linear_combination(
    double a, std::shared_ptr<const CollinearFunctional> fa, double b,
    std::shared_ptr<const CollinearFunctional> fb) {
  return std::make_shared<LinearCombination>(a, std::move(fa), b, std::move(fb));
}

std::shared_ptr<const CollinearFunctional> shifted(std::shared_ptr<const CollinearFunctional> f,
                                                   double constant) {
  return std::make_shared<Shifted>(std::move(f), constant);
}

std::shared_ptr<const CollinearFunctional> spin_independent_part(
    std::shared_ptr<const CollinearFunctional> f) {
  return std::make_shared<SpinIndependentPart>(std::move(f));
}

}  // namespace mcxc
