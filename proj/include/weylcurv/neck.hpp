#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "weylcurv/curvature.hpp"

namespace weylcurv {

/// Surgery-neck model parameters. m is the sphere dimension, q the
/// codimension, r the tube radius, theta the angle between the hypersurface
/// normal and the axial direction, k the curvature of the bending curve, and
/// h4_base the invariant of the θ=0 product model. All neck outputs are
/// leading-order: the remainder terms of the expansions are dropped.
struct NeckParams {
  int m = 0;
  int q = 5;
  double r = 1.0;
  double theta = 0.0;
  double k = 0.0;
  double h4_base = 0.0;
};

/// Leading terms of one squared-curvature expansion, as exact polynomials in
/// the codimension q: coefficients of sin⁴θ/r⁴, k²sin²θ/r², and k·sin³θ/r³.
struct LeadingTerms {
  Rational sin4_r4;
  Rational k2_sin2_r2;
  Rational k_sin3_r3;

  double eval(double r, double theta, double k) const;
};

struct NeckNormExpansions {
  int q = 0;
  LeadingTerms riem_sq;   // ‖R‖² − base
  LeadingTerms ricci_sq;  // ‖Ric‖² − base
  LeadingTerms scal_sq;   // scal² − base
  /// ‖R‖² − ‖Ric‖² + ¼scal², recombined term by term. The k² coefficient
  /// vanishes identically: (q−1) − q(q−1) + (q−1)² = 0.
  LeadingTerms combination;
  /// k·sin³θ/r³ coefficient used by the conservative h4 evaluator (opposite
  /// in sign to the recombination; see k_sign_note).
  Rational conservative_k_coeff;
  std::string k_sign_note;
};

NeckNormExpansions norm_expansions(int q);

struct NeckNormValues {
  double riem_sq_lead, ricci_sq_lead, scal_sq_lead, combination_lead;
};
NeckNormValues norm_expansions_at(const NeckParams& p);

/// Leading-order invariant of the neck hypersurface:
/// h4_base + (q−1)(q−2)(q−3)(q−4)/(4r⁴)·sin⁴θ − (q−1)(q−2)(q−3)·k/(2r³)·sin³θ.
double h4_neck_leading(const NeckParams& p);

/// Lower bound h4_base + (q−1)(q−2)(q−3)/(2r³)·sin³θ·(sinθ/(2r) − k);
/// positive whenever k < sinθ/(2r) and h4_base ≥ 0. Requires q ≥ 5.
double h4_neck_lower_bound(const NeckParams& p);

/// Point on the bending curve plus the invariant values the planner tracks.
/// The curve obeys dr/ds = −sinθ, dt/ds = cosθ, dθ/ds = k, integrated by
/// forward Euler with a fixed step.
struct NeckState {
  double s, r, t, theta, k;
  double h4_leading, h4_lower_bound;
};

struct BendPolicy {
  double plateau_fraction = 0.9;   // of the cap sinθ/(2r), at bump start
  double bump_arc_fraction = 0.5;  // bump arc length as a fraction of r
  double ramp_fraction = 0.25;     // of the bump arc, each side of the plateau
  double straight_arc_fraction = 0.25;  // straight-run length between bumps
  double step_fraction = 1e-3;          // Euler step h = step_fraction·r_start
  double theta_tol = 1e-9;
  int max_bumps = 100000;
};

struct BendPlan {
  bool feasible = false;
  std::string failure_reason;
  int bumps = 0;
  double arc_length = 0.0;
  double final_theta = 0.0;
  double min_r = 0.0;
  double min_lower_bound = 0.0;
  /// min over the path of sinθ/(2r) − k; positive means the cap held.
  double min_cap_margin = 0.0;
  std::vector<NeckState> states;
};

/// Gromov–Lawson style schedule: alternating straight runs and capped
/// curvature bumps (plateau with linear ramps), each bump of arc length
/// r/2 and Δθ ≤ sinθ₀/4, until the total bend reaches π/2. Asserts the
/// per-bump radius retention Δr ≤ Δs and pointwise positivity of the lower
/// bound when h4_base ≥ 0. Requires q ≥ 5, r_start > 0, θ₀ ∈ (0, π/2).
BendPlan plan_bending(int q, double r_start, double theta0, double h4_base = 0.0,
                      const BendPolicy& policy = {});

/// Per-step CSV: s, r, t, theta, k, h4_leading, h4_lower_bound.
void write_plan_csv(const BendPlan& plan, std::ostream& out);

/// One row of the submersion scaling check for the product model
/// g_t = t²g_F ⊕ g_B, all entries exact.
struct ScalingCheck {
  Rational t;
  Rational h4_t;             // invariant of the constructed scaled product
  Rational fiber_term;       // t⁻⁴·h4(F)
  Rational cross_term;       // t⁻²·½·scal_F·scal_B
  Rational base_term;        // h4(B)
  Rational remainder;        // h4_t − fiber_term
  bool exact_match = false;  // remainder == cross_term + base_term
};

/// Verifies that h4 of the scaled product splits exactly into the t⁻⁴ fiber
/// term plus a remainder of order t⁻², with the remainder's constant part
/// equal to h4(B) at every t.
std::vector<ScalingCheck> submersion_scaling_check(const CurvatureTensor& fiber,
                                                   const CurvatureTensor& base,
                                                   std::span<const Rational> ts);

}  // namespace weylcurv
