#include "weylcurv/neck.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "weylcurv/models.hpp"

namespace weylcurv {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

double quartic_coeff(int q) {
  return static_cast<double>((q - 1) * (q - 2) * (q - 3) * (q - 4)) / 4.0;
}

double cubic_coeff(int q) {
  return static_cast<double>((q - 1) * (q - 2) * (q - 3)) / 2.0;
}

}  // namespace

double LeadingTerms::eval(double r, double theta, double k) const {
  const double s = std::sin(theta);
  return to_double(sin4_r4) * s * s * s * s / (r * r * r * r) +
         to_double(k2_sin2_r2) * k * k * s * s / (r * r) +
         to_double(k_sin3_r3) * k * s * s * s / (r * r * r);
}

NeckNormExpansions norm_expansions(int q) {
  NeckNormExpansions e;
  e.q = q;
  const Rational q1(q - 1), q2(q - 2);
  e.riem_sq = {q1 * q2 / 2, q1, Rational(0)};
  e.ricci_sq = {q1 * q2 * q2, Rational(q) * q1, -q1 * q2 * q2};
  e.scal_sq = {q1 * q1 * q2 * q2, 4 * q1 * q1, -2 * q1 * q1 * q2};
  e.combination = {
      e.riem_sq.sin4_r4 - e.ricci_sq.sin4_r4 + e.scal_sq.sin4_r4 / 4,
      e.riem_sq.k2_sin2_r2 - e.ricci_sq.k2_sin2_r2 + e.scal_sq.k2_sin2_r2 / 4,
      e.riem_sq.k_sin3_r3 - e.ricci_sq.k_sin3_r3 + e.scal_sq.k_sin3_r3 / 4,
  };
  e.conservative_k_coeff = -q1 * q2 * Rational(q - 3) / 2;
  e.k_sign_note =
      "norm recombination gives the k*sin^3/r^3 term with coefficient +"
      "(q-1)(q-2)(q-3)/2; the h4 evaluators use the conservative opposite sign "
      "(bending curvature penalizes positivity)";
  return e;
}

NeckNormValues norm_expansions_at(const NeckParams& p) {
  require(p.r > 0, "tube radius must be positive");
  const NeckNormExpansions e = norm_expansions(p.q);
  return NeckNormValues{
      e.riem_sq.eval(p.r, p.theta, p.k),
      e.ricci_sq.eval(p.r, p.theta, p.k),
      e.scal_sq.eval(p.r, p.theta, p.k),
      e.combination.eval(p.r, p.theta, p.k),
  };
}

double h4_neck_leading(const NeckParams& p) {
  require(p.r > 0, "tube radius must be positive");
  const double s = std::sin(p.theta);
  return p.h4_base + quartic_coeff(p.q) * s * s * s * s / (p.r * p.r * p.r * p.r) -
         cubic_coeff(p.q) * p.k * s * s * s / (p.r * p.r * p.r);
}

double h4_neck_lower_bound(const NeckParams& p) {
  require(p.r > 0, "tube radius must be positive");
  if (p.q < 5) {
    throw std::invalid_argument("the h4 lower bound needs codimension q >= 5");
  }
  const double s = std::sin(p.theta);
  return p.h4_base +
         cubic_coeff(p.q) * s * s * s / (p.r * p.r * p.r) * (s / (2 * p.r) - p.k);
}

namespace {

struct Walker {
  int q;
  double h4_base;
  double h;  // Euler step, reset per segment to track the shrinking radius
  double s = 0, r = 0, t = 0, theta = 0;
  BendPlan* plan;

  void record(double k) {
    const NeckParams at{0, q, r, theta, k, h4_base};
    const double lead = h4_neck_leading(at);
    const double bound = h4_neck_lower_bound(at);
    plan->states.push_back(NeckState{s, r, t, theta, k, lead, bound});
    if (plan->states.size() == 1 || bound < plan->min_lower_bound) {
      plan->min_lower_bound = bound;
    }
    const double margin = std::sin(theta) / (2 * r) - k;
    if (plan->states.size() == 1 || margin < plan->min_cap_margin) {
      plan->min_cap_margin = margin;
    }
    if (r < plan->min_r) plan->min_r = r;
  }

  // One Euler step with the given curvature; returns the θ increment.
  double step(double k) {
    r -= std::sin(theta) * h;
    t += std::cos(theta) * h;
    theta += k * h;
    s += h;
    record(k);
    return k * h;
  }
};

}  // namespace

BendPlan plan_bending(int q, double r_start, double theta0, double h4_base,
                      const BendPolicy& policy) {
  require(q >= 5, "bending plan needs codimension q >= 5");
  require(r_start > 0, "bending plan needs r_start > 0");
  require(theta0 > 0 && theta0 < std::numbers::pi / 2, "theta0 must lie in (0, pi/2)");
  require(policy.plateau_fraction > 0 && policy.plateau_fraction < 1,
          "plateau fraction must lie in (0,1)");

  BendPlan plan;
  plan.min_r = r_start;
  Walker w{q, h4_base, policy.step_fraction * r_start, 0, r_start, 0, theta0, &plan};
  w.record(0.0);

  const double half_pi = std::numbers::pi / 2;
  const double dtheta_cap = std::sin(theta0) / 4;

  while (w.theta < half_pi - policy.theta_tol) {
    if (plan.bumps >= policy.max_bumps) {
      plan.failure_reason = "bump budget exhausted before reaching pi/2";
      plan.arc_length = w.s;
      plan.final_theta = w.theta;
      return plan;
    }

    // straight run at constant angle
    w.h = policy.step_fraction * w.r;
    const double straight = policy.straight_arc_fraction * w.r;
    for (double done = 0; done < straight; done += w.h) w.step(0.0);

    // bump: plateau with linear ramps, capped below sinθ/(2r)
    const double r0 = w.r;
    w.h = policy.step_fraction * r0;
    const double arc = policy.bump_arc_fraction * r0;
    const double ramp = policy.ramp_fraction * arc;
    const double k_plateau = policy.plateau_fraction * std::sin(w.theta) / (2 * w.r);
    const double cap = std::min(dtheta_cap, half_pi - w.theta);

    double bent = 0.0, travelled = 0.0;
    while (travelled < arc && bent < cap && w.theta < half_pi) {
      double k = k_plateau;
      if (travelled < ramp) {
        k *= travelled / ramp;
      } else if (arc - travelled < ramp) {
        k *= (arc - travelled) / ramp;
      }
      // the closing step lands exactly on the cap instead of overshooting it
      k = std::min(k, (cap - bent) / w.h);
      bent += w.step(k);
      travelled += w.h;
    }
    ++plan.bumps;

    if (bent <= 1e-14) {
      plan.failure_reason = "bend increment underflowed the step tolerance";
      plan.arc_length = w.s;
      plan.final_theta = w.theta;
      return plan;
    }
    const double dr = r0 - w.r;
    if (dr > travelled + 1e-12 || w.r < r0 / 2 - 1e-12 || w.r <= 0) {
      plan.failure_reason = "radius retention violated (dr > ds within a bump)";
      plan.arc_length = w.s;
      plan.final_theta = w.theta;
      return plan;
    }
  }

  plan.arc_length = w.s;
  plan.final_theta = w.theta;
  plan.feasible = plan.min_cap_margin > 0 &&
                  (h4_base < 0 || plan.min_lower_bound > 0) &&
                  plan.min_r > 0;
  if (!plan.feasible && plan.failure_reason.empty()) {
    plan.failure_reason = "cap margin or lower bound lost positivity";
  }
  return plan;
}

void write_plan_csv(const BendPlan& plan, std::ostream& out) {
  out << "s,r,t,theta,k,h4_leading,h4_lower_bound\n";
  out.precision(17);
  for (const NeckState& st : plan.states) {
    out << st.s << ',' << st.r << ',' << st.t << ',' << st.theta << ',' << st.k
        << ',' << st.h4_leading << ',' << st.h4_lower_bound << '\n';
  }
}

std::vector<ScalingCheck> submersion_scaling_check(const CurvatureTensor& fiber,
                                                   const CurvatureTensor& base,
                                                   std::span<const Rational> ts) {
  const Rational h4_fiber = h4_formal(fiber);
  const Rational h4_base = h4_formal(base);
  const Rational scal_f = scalar_curv(fiber);
  const Rational scal_b = scalar_curv(base);

  std::vector<ScalingCheck> out;
  out.reserve(ts.size());
  for (const Rational& t : ts) {
    if (t <= 0) throw std::invalid_argument("scaling parameter must be positive");
    // vertical scaling by t²: fiber metric becomes t²g_F
    const CurvatureTensor scaled = models::scale_metric(fiber, t * t);
    const CurvatureTensor total = models::product_tensor(scaled, base);
    ScalingCheck row;
    row.t = t;
    row.h4_t = h4_formal(total);
    row.fiber_term = h4_fiber / (t * t * t * t);
    row.cross_term = scal_f * scal_b / (2 * t * t);
    row.base_term = h4_base;
    row.remainder = row.h4_t - row.fiber_term;
    row.exact_match = row.remainder == row.cross_term + row.base_term;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace weylcurv
