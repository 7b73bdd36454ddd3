#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "weylcurv/models.hpp"
#include "weylcurv/neck.hpp"

using namespace weylcurv;

namespace {
constexpr double kHalfPi = std::numbers::pi / 2;
}

TEST_CASE("leading-order invariant of the neck") {
  // theta = 0 reduces to the base model
  for (int q = 5; q <= 8; ++q) {
    CHECK(h4_neck_leading(NeckParams{2, q, 0.3, 0.0, 1.0, 17.5}) == 17.5);
  }

  // straightened tube of radius eps: quartic term only
  const double v = h4_neck_leading(NeckParams{2, 5, 0.1, kHalfPi, 0.0, 0.0});
  CHECK(v == doctest::Approx(60000.0).epsilon(1e-12));  // 24 / (4 eps^4)

  // q = 4 kills the quartic coefficient
  CHECK(h4_neck_leading(NeckParams{2, 4, 0.1, kHalfPi, 0.0, 3.0}) ==
        doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("lower bound for the neck invariant") {
  // k = sin(theta)/(2r): the bound collapses to the base value
  const double theta = 0.7, r = 0.4, base = 2.25;
  const double k_star = std::sin(theta) / (2 * r);
  CHECK(h4_neck_lower_bound(NeckParams{2, 6, r, theta, k_star, base}) ==
        doctest::Approx(base).epsilon(1e-12));

  // pinned arithmetic: q=5, r=0.1, theta=pi/4, k=0, base=0 gives 15000
  const double bound =
      h4_neck_lower_bound(NeckParams{2, 5, 0.1, std::numbers::pi / 4, 0.0, 0.0});
  CHECK(bound == doctest::Approx(15000.0).epsilon(1e-12));
  CHECK(bound > 0);

  // over-bending drives the bound below the base value
  CHECK(h4_neck_lower_bound(NeckParams{2, 6, r, theta, 2 * k_star, base}) < base);

  CHECK_THROWS_AS(h4_neck_lower_bound(NeckParams{2, 4, 1.0, 0.3, 0.0, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("norm expansion recombination") {
  for (int q = 2; q <= 12; ++q) {
    const NeckNormExpansions e = norm_expansions(q);
    const Rational quartic = Rational((q - 1) * (q - 2) * (q - 3) * (q - 4)) / 4;
    const Rational cubic = Rational((q - 1) * (q - 2) * (q - 3)) / 2;
    CHECK(e.combination.sin4_r4 == quartic);
    CHECK(e.combination.k2_sin2_r2 == 0);
    CHECK(e.combination.k_sin3_r3 == cubic);
    CHECK(e.conservative_k_coeff == -cubic);
  }

  const NeckNormExpansions q2 = norm_expansions(2);
  CHECK(q2.riem_sq.sin4_r4 == 0);
  CHECK(q2.ricci_sq.sin4_r4 == 0);
  CHECK(q2.scal_sq.sin4_r4 == 0);
  CHECK(q2.ricci_sq.k_sin3_r3 == 0);
  CHECK(q2.scal_sq.k_sin3_r3 == 0);

  // numeric evaluation against a hand-computed point: q=5, r=1, theta=pi/2, k=1
  const NeckNormValues at =
      norm_expansions_at(NeckParams{2, 5, 1.0, kHalfPi, 1.0, 0.0});
  CHECK(at.riem_sq_lead == doctest::Approx(6.0 + 4.0));       // (q-1)(q-2)/2 + (q-1)k²
  CHECK(at.ricci_sq_lead == doctest::Approx(36.0 + 20.0 - 36.0));
  CHECK(at.scal_sq_lead == doctest::Approx(144.0 + 64.0 - 96.0));
  CHECK(at.combination_lead == doctest::Approx(6.0 + 12.0));  // quartic + cubic·k
}

TEST_CASE("bending planner") {
  const BendPlan plan = plan_bending(5, 1.0, 0.3);
  CHECK(plan.feasible);
  CHECK(plan.failure_reason.empty());
  CHECK(plan.final_theta == doctest::Approx(kHalfPi).epsilon(1e-3));
  CHECK(plan.min_lower_bound > 0);
  CHECK(plan.min_cap_margin > 0);
  CHECK(plan.min_r > 0);

  const double dtheta_cap = std::sin(0.3) / 4;
  double bump_dtheta = 0.0, bump_dr = 0.0, bump_ds = 0.0;
  bool in_bump = false;
  for (std::size_t i = 1; i < plan.states.size(); ++i) {
    const NeckState& prev = plan.states[i - 1];
    const NeckState& cur = plan.states[i];
    CHECK(cur.theta >= prev.theta - 1e-15);  // monotone bend
    CHECK(cur.r <= prev.r + 1e-15);          // monotone radius
    CHECK(cur.h4_lower_bound > 0);
    if (cur.k > 0) {
      if (!in_bump) {
        in_bump = true;
        bump_dtheta = bump_dr = bump_ds = 0.0;
      }
      bump_dtheta += cur.theta - prev.theta;
      bump_dr += prev.r - cur.r;
      bump_ds += cur.s - prev.s;
    } else if (in_bump) {
      in_bump = false;
      CHECK(bump_dtheta <= dtheta_cap + 1e-9);  // hard cap per bump
      CHECK(bump_dr <= bump_ds + 1e-12);        // radius retention
    }
  }

  CHECK(plan_bending(6, 0.5, 0.2).feasible);
}

TEST_CASE("planner rejects bad parameters and reports infeasibility") {
  CHECK_THROWS_AS(plan_bending(4, 1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(plan_bending(5, -1.0, 0.3), std::invalid_argument);
  CHECK_THROWS_AS(plan_bending(5, 1.0, 2.0), std::invalid_argument);

  const BendPlan stuck = plan_bending(5, 1.0, 1e-15);
  CHECK_FALSE(stuck.feasible);
  CHECK_FALSE(stuck.failure_reason.empty());
}

TEST_CASE("plan CSV emission") {
  const BendPlan plan = plan_bending(5, 1.0, 0.5);
  std::ostringstream os;
  write_plan_csv(plan, os);
  const std::string text = os.str();
  CHECK(text.rfind("s,r,t,theta,k,h4_leading,h4_lower_bound\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : text) lines += c == '\n';
  CHECK(lines == plan.states.size() + 1);
}

TEST_CASE("submersion scaling splits exactly in the product model") {
  const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
  const Rational ts[] = {Rational(1), Rational(2), Rational(10), Rational(100)};
  const auto rows = submersion_scaling_check(s4, s4, ts);

  CHECK(rows[0].h4_t == Rational(84));          // t = 1: the plain product
  CHECK(rows[2].h4_t == Rational(33603, 5000));  // t = 10: 6e-4 + 72e-2 + 6
  for (const auto& row : rows) {
    CHECK(row.exact_match);
    const Rational t4 = row.t * row.t * row.t * row.t;
    CHECK(t4 * (row.h4_t - row.base_term - row.cross_term) == Rational(6));
  }

  // mixed factors, still exact
  const CurvatureTensor fiber = models::random_bianchi(4, 21, 2);
  const CurvatureTensor base =
      models::hypersurface({Rational(1), Rational(2), Rational(1)});
  for (const auto& row : submersion_scaling_check(fiber, base, ts)) {
    CHECK(row.exact_match);
  }
}
