#pragma once

#include <utility>
#include <vector>

#include "weylcurv/double_form.hpp"

namespace weylcurv {

/// Algebraic curvature tensor: a slot-symmetric (2,2) double form satisfying
/// the first Bianchi identity exactly. Construction validates both; dimensions
/// 2 and 3 are accepted as building blocks for products, while decomposition
/// and the h4 report require n ≥ 4.
class CurvatureTensor {
 public:
  explicit CurvatureTensor(DoubleForm form);

  int dim() const { return form_.dim(); }
  const DoubleForm& form() const { return form_; }

  friend bool operator==(const CurvatureTensor& a, const CurvatureTensor& b) {
    return a.form_ == b.form_;
  }

 private:
  DoubleForm form_;
};

/// Orthogonal decomposition R = ω₂ + g·ω₁ + g²·ω₀ into scalar, traceless
/// Ricci, and Weyl (= conformal, effective) parts.
struct WeylDecomposition {
  Rational omega0;
  DoubleForm omega1;  // (1,1), traceless symmetric
  DoubleForm omega2;  // (2,2), effective symmetric
};

struct EinsteinCheck {
  bool is_einstein;
  Rational deviation_sq;  // ‖cR − (c²R/n)g‖², exactly (n−2)²‖ω₁‖²
};

/// Everything the invariant pipeline knows about one tensor. The three h4
/// entries come from independent formulas and must agree exactly.
struct InvariantReport {
  int n = 0;
  std::vector<std::pair<int, Rational>> h2q;  // (q, h_{2q}) for 2q ≤ n
  Rational norm_r_sq, norm_ricci_sq, scal, scal_sq;
  Rational omega0, norm_omega0_sq, norm_omega1_sq, norm_omega2_sq;
  Rational h4_direct;       // ‖R‖² − ‖cR‖² + ¼‖c²R‖²
  Rational h4_decomposed;   // weighted ω-norm combination
  Rational h4_contraction;  // c⁴R²/4!
  bool h4_agree = false;
  bool is_einstein = false;
  Rational einstein_deviation_sq;
};

struct NormSplit {
  Rational omega2_sq, omega1_sq, omega0_sq;
};

DoubleForm ricci(const CurvatureTensor& r);
Rational scalar_curv(const CurvatureTensor& r);

/// Requires n ≥ 4 (the traceless Ricci part divides by n−2 and the h4 weights
/// need (n−4)!).
WeylDecomposition decompose(const CurvatureTensor& r);

/// h_{2q}: complete contraction c^{2q}R^q/(2q)!, cross-checked exactly
/// against the star route *(g^{n−2q}R^q)/(n−2q)!. Requires 2q ≤ n.
Rational h2q(const CurvatureTensor& r, int q);

/// Contraction route only, defined for every q ≥ 1 (zero once R^q
/// annihilates). Used by the product binomial law, where low-dimensional
/// factors contribute formal zeros.
Rational h2q_contraction(const CurvatureTensor& r, int q);

/// ‖R‖² − ‖cR‖² + ¼‖c²R‖², well-defined in every dimension; coincides with
/// h2q_contraction(·, 2) for n ≥ 1.
Rational h4_formal(const CurvatureTensor& r);

/// Part norms computed from (‖R‖², ‖cR‖², ‖c²R‖²) alone, checked exactly
/// against the direct norms of decompose(). Requires n ≥ 4.
NormSplit norm_formulas(const CurvatureTensor& r);

EinsteinCheck einstein_check(const CurvatureTensor& r);

/// Full report with all three h4 routes and the h_{2q} ladder. Requires n ≥ 4.
InvariantReport h4_report(const CurvatureTensor& r);

}  // namespace weylcurv
