#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "mcxc/functionals.hpp"
#include "support.hpp"

using namespace mcxc;
using mcxc::testing::rel_diff;
using Catch::Matchers::ContainsSubstring;

namespace {

const std::vector<FunctionalId> kLocal = {FunctionalId::slater_lsda, FunctionalId::toy1_gga,
                                          FunctionalId::toy2_gga, FunctionalId::toy3_mgga,
                                          FunctionalId::toy6_mgga_u};

// Literal double sums, independent of the factorized evaluator.
double double_sum(FunctionalId id, const std::vector<WeightedSpin>& spins) {
  double e = 0.0;
  for (const auto& a : spins) {
    for (const auto& b : spins) {
      const double ss = a.s * b.s;
      e += (id == FunctionalId::toy4_nonlocal ? ss : ss * ss) * a.w * b.w;
    }
  }
  return e;
}

double step_for(double x) { return 1e-5 * std::max(1.0, std::abs(x)); }

}  // namespace

TEST_CASE("registry examples") {
  SECTION("toy1") {
    ProjectedPoint p;
    p.grad_m_w = Vec3(1.0, 0.0, 0.0);
    const auto c = eval_collinear(FunctionalId::toy1_gga, p, 1);
    CHECK(c.f == 1.0);
    CHECK(c.d(Var::grad_s_x) == 2.0);
    CHECK(c.d(Var::grad_s_y) == 0.0);
    CHECK(c.d(Var::grad_s_z) == 0.0);
  }
  SECTION("toy3") {
    ProjectedPoint p;
    p.m_w = 2.0;
    p.lap_m_w = 3.0;
    const auto c = eval_collinear(FunctionalId::toy3_mgga, p, 1);
    CHECK(c.f == 6.0);
    CHECK(c.d(Var::s) == 3.0);
    CHECK(c.d(Var::lap_s) == 2.0);
  }
  SECTION("slater at zero polarization") {
    ProjectedPoint p;
    p.n = 1.0;
    const auto c = eval_collinear(FunctionalId::slater_lsda, p, 1);
    const double cx = 0.75 * std::cbrt(3.0 / std::acos(-1.0));
    CHECK(c.f == Catch::Approx(-2.0 * cx).epsilon(1e-15));
    CHECK(c.d(Var::s) == 0.0);
    const auto& f = local_functional(FunctionalId::slater_lsda);
    const double fd = testing::central(
        [&](double s) { return f.evaluate(std::vector<double>{1.0, s}, 0).f; }, 0.0, 1e-4);
    CHECK(std::abs(fd) < 1e-10);
  }
  SECTION("toy2 and toy6") {
    ProjectedPoint p;
    p.grad_n = Vec3(1.0, 2.0, 3.0);
    p.m_w = 0.5;
    p.grad_m_w = Vec3(-1.0, 0.5, 2.0);
    p.u_w = 4.0;
    CHECK(eval_collinear(FunctionalId::toy2_gga, p, 0).f == 0.5 * (-1.0 + 1.0 + 6.0));
    CHECK(eval_collinear(FunctionalId::toy6_mgga_u, p, 0).f == 2.0);
  }
}

TEST_CASE("analytic partials match finite differences") {
  std::mt19937_64 rng(2024);
  for (FunctionalId id : kLocal) {
    const CollinearFunctional& f = local_functional(id);
    CAPTURE(f.name());
    const std::size_t k = f.variables().size();
    double worst1 = 0.0, worst2 = 0.0, worst3 = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = testing::random_inputs(f, rng);
      const auto c = f.evaluate(x, 3);
      for (std::size_t i = 0; i < k; ++i) {
        const double h = step_for(x[i]);
        auto xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const auto cp = f.evaluate(xp, 2), cm = f.evaluate(xm, 2);
        worst1 = std::max(worst1, rel_diff(c.g(i), (cp.f - cm.f) / (2 * h)));
        for (std::size_t j = 0; j < k; ++j) {
          worst2 = std::max(worst2, rel_diff(c.h(j, i), (cp.g(j) - cm.g(j)) / (2 * h)));
          for (std::size_t l = 0; l < k; ++l) {
            worst3 = std::max(worst3, rel_diff(c.t(j, l, i), (cp.h(j, l) - cm.h(j, l)) / (2 * h)));
          }
        }
      }
    }
    CHECK(worst1 < 1e-6);
    CHECK(worst2 < 1e-6);
    CHECK(worst3 < 1e-6);
  }
}

TEST_CASE("symmetry and time-reversal evenness") {
  std::mt19937_64 rng(7);
  for (FunctionalId id : kLocal) {
    const CollinearFunctional& f = local_functional(id);
    CAPTURE(f.name());
    const auto& vars = f.variables();
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = testing::random_inputs(f, rng);
      auto flipped = x, zeroed = x;
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars.odd(i)) {
          flipped[i] = -x[i];
          zeroed[i] = 0.0;
        }
      }
      const auto c = f.evaluate(x, 3);
      CHECK(std::abs(c.f - f.evaluate(flipped, 0).f) <= 1e-13 * std::max(1.0, std::abs(c.f)));
      for (std::size_t i = 0; i < vars.size(); ++i) {
        for (std::size_t j = 0; j < vars.size(); ++j) {
          CHECK(std::abs(c.h(i, j) - c.h(j, i)) <= 1e-13);
          for (std::size_t l = 0; l < vars.size(); ++l) {
            CHECK(std::abs(c.t(i, j, l) - c.t(l, i, j)) <= 1e-13);
          }
        }
      }
      const auto z = f.evaluate(zeroed, 1);
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars.odd(i)) CHECK(std::abs(z.g(i)) <= 1e-13);
      }
    }
  }
}

TEST_CASE("slater_lsda") {
  const auto& f = local_functional(FunctionalId::slater_lsda);
  SECTION("unpolarized value depends on n only") {
    for (double n : {0.1, 0.7, 1.0, 3.5}) {
      const auto c = f.evaluate(std::vector<double>{n, 0.0}, 0);
      CHECK(c.f == Catch::Approx(-2.0 * slater_cx() * std::pow(n, 4.0 / 3.0)).epsilon(1e-14));
    }
  }
  SECTION("out-of-domain spin is clamped and flagged") {
    const auto c = f.evaluate(std::vector<double>{1.0, 1.5}, 1);
    CHECK(c.clamped);
    CHECK(c.f == Catch::Approx(-slater_cx() * std::pow(2.0, 4.0 / 3.0)).epsilon(1e-14));
    CHECK_FALSE(f.evaluate(std::vector<double>{1.0, 0.5}, 1).clamped);
    const auto zero = f.evaluate(std::vector<double>{0.0, 0.0}, 3);
    CHECK(zero.f == 0.0);
    for (double d : zero.d3) CHECK(std::isfinite(d));
  }
}

TEST_CASE("non-local toys") {
  using V = std::vector<WeightedSpin>;
  CHECK(eval_nonlocal_collinear(FunctionalId::toy4_nonlocal, V{{1.0, 1.0}}) == 1.0);
  const V flip{{1.0, 1.0}, {-1.0, 1.0}};
  CHECK(eval_nonlocal_collinear(FunctionalId::toy4_nonlocal, flip) == 0.0);
  CHECK(eval_nonlocal_collinear(FunctionalId::toy5_nonlocal, flip) == double_sum(FunctionalId::toy5_nonlocal, flip));
  CHECK(double_sum(FunctionalId::toy5_nonlocal, flip) == 4.0);

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0), w(0.1, 1.0);
  for (FunctionalId id : {FunctionalId::toy4_nonlocal, FunctionalId::toy5_nonlocal}) {
    V spins(17);
    for (auto& s : spins) s = {u(rng), w(rng)};
    const double e = eval_nonlocal_collinear(id, spins);
    CHECK(rel_diff(e, double_sum(id, spins)) < 1e-14);
    // sum_i s_i dE/ds_i by central differences of the double sum.
    double response = 0.0;
    for (std::size_t i = 0; i < spins.size(); ++i) {
      auto shifted = [&](double ds) {
        V v = spins;
        v[i].s += ds;
        return double_sum(id, v);
      };
      response += spins[i].s * testing::central(shifted, 0.0, 1e-4);
    }
    CHECK(rel_diff(nonlocal_response(id, spins), response) < 1e-9);
    const double degree = id == FunctionalId::toy4_nonlocal ? 2.0 : 4.0;
    CHECK(rel_diff(nonlocal_response(id, spins), degree * e) < 1e-14);
  }

  CHECK_THROWS_AS(eval_nonlocal_collinear(FunctionalId::toy4_nonlocal, V{}), std::invalid_argument);
  CHECK_THROWS_AS(eval_nonlocal_collinear(FunctionalId::toy1_gga, flip), std::invalid_argument);
  CHECK_THROWS_WITH(local_functional(FunctionalId::toy5_nonlocal), ContainsSubstring("non-local"));
  CHECK_THROWS_AS(eval_collinear(FunctionalId::toy4_nonlocal, ProjectedPoint{}, 0),
                  std::invalid_argument);
}

TEST_CASE("registry and argument checks") {
  CHECK(functional_from_string("toy2_gga") == FunctionalId::toy2_gga);
  for (FunctionalId id : all_functionals()) CHECK(functional_from_string(to_string(id)) == id);
  CHECK_THROWS_WITH(functional_from_string("pbe"), ContainsSubstring("known functionals"));
  CHECK_THROWS_AS(eval_collinear(FunctionalId::toy1_gga, ProjectedPoint{}, 4), std::invalid_argument);
  CHECK_THROWS_AS(local_functional(FunctionalId::toy1_gga).evaluate(std::vector<double>{1.0}, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(VariableSet({Var::n, Var::s, Var::n}), std::invalid_argument);
  CHECK_THROWS_AS(VariableSet(std::vector<Var>{}), std::invalid_argument);
  const VariableSet merged = VariableSet::merge(VariableSet({Var::s, Var::n}), VariableSet({Var::tau, Var::s}));
  CHECK(merged.vars() == std::vector<Var>{Var::n, Var::tau, Var::s});
}

TEST_CASE("combinators") {
  std::mt19937_64 rng(9);
  const auto lsda = shared_local_functional(FunctionalId::slater_lsda);
  const auto toy2 = shared_local_functional(FunctionalId::toy2_gga);
  const auto mix = linear_combination(0.75, lsda, -2.0, toy2);
  CHECK(mix->variables().vars() ==
        std::vector<Var>{Var::n, Var::grad_n_x, Var::grad_n_y, Var::grad_n_z, Var::s,
                         Var::grad_s_x, Var::grad_s_y, Var::grad_s_z});
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testing::random_inputs(*mix, rng);
    std::vector<double> xa{x[0], x[4]};
    std::vector<double> xb{x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
    const auto c = mix->evaluate(x, 3);
    const auto ca = lsda->evaluate(xa, 3), cb = toy2->evaluate(xb, 3);
    CHECK(c.f == Catch::Approx(0.75 * ca.f - 2.0 * cb.f).epsilon(1e-15));
    CHECK(c.d(Var::n, Var::s) == 0.75 * ca.d(Var::n, Var::s));
    CHECK(c.d(Var::s, Var::grad_s_y) == -2.0 * cb.d(Var::s, Var::grad_s_y));
    CHECK(c.d(Var::grad_n_x, Var::s, Var::grad_s_x) == -2.0 * cb.d(Var::grad_n_x, Var::s, Var::grad_s_x));
    CHECK(c.d(Var::s, Var::s, Var::s) == Catch::Approx(0.75 * ca.d(Var::s, Var::s, Var::s)).epsilon(1e-15));

    const auto sh = shifted(toy2, 1.25)->evaluate(xb, 2);
    CHECK(sh.f == cb.f + 1.25);
    CHECK(sh.d1 == toy2->evaluate(xb, 2).d1);

    const auto si = spin_independent_part(lsda)->evaluate(xa, 3);
    CHECK(si.f == lsda->evaluate(std::vector<double>{xa[0], 0.0}, 0).f);
    CHECK(si.d(Var::s) == 0.0);
    CHECK(si.d(Var::n, Var::s) == 0.0);
    CHECK(si.d(Var::n) == lsda->evaluate(std::vector<double>{xa[0], 0.0}, 1).d(Var::n));
  }
}
