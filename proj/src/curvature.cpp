#include "weylcurv/curvature.hpp"

#include <sstream>
#include <stdexcept>

namespace weylcurv {

namespace {

void require_dim(const CurvatureTensor& r, int min_n, const char* what) {
  if (r.dim() < min_n) {
    std::ostringstream os;
    os << what << " unsupported in dimension " << r.dim() << " (needs n >= " << min_n << ")";
    throw std::domain_error(os.str());
  }
}

DoubleForm power(const DoubleForm& base, int exp) {
  DoubleForm out = DoubleForm::scalar(base.dim(), Rational(1));
  for (int i = 0; i < exp; ++i) out = product(out, base);
  return out;
}

Rational as_scalar(const DoubleForm& f) {
  if (f.deg_p() != 0 || f.deg_q() != 0) throw std::logic_error("expected a scalar form");
  return f.raw().empty() ? Rational(0) : f.raw()[0];
}

}  // namespace

CurvatureTensor::CurvatureTensor(DoubleForm form) : form_(std::move(form)) {
  if (form_.deg_p() != 2 || form_.deg_q() != 2) {
    throw std::invalid_argument("curvature tensor must have bidegree (2,2)");
  }
  if (!is_slot_symmetric(form_)) {
    throw std::invalid_argument("curvature tensor must be slot-symmetric");
  }
  const Rational defect = first_bianchi_defect(form_);
  if (defect != 0) {
    throw std::invalid_argument("first Bianchi identity violated, defect = " +
                                to_string(defect));
  }
}

DoubleForm ricci(const CurvatureTensor& r) { return contract(r.form()); }

Rational scalar_curv(const CurvatureTensor& r) {
  return as_scalar(contract_times(r.form(), 2));
}

WeylDecomposition decompose(const CurvatureTensor& r) {
  require_dim(r, 4, "Weyl decomposition");
  const int n = r.dim();
  const DoubleForm g = DoubleForm::metric(n);
  const DoubleForm ric = ricci(r);
  const Rational scal = scalar_curv(r);
  const Rational omega0 = scal / Rational(2 * n * (n - 1));
  DoubleForm omega1 = (ric - g * (scal / Rational(n))) * (Rational(1) / Rational(n - 2));
  DoubleForm omega2 = r.form() - product(g, omega1) - DoubleForm::metric_power(n, 2) * omega0;
  return WeylDecomposition{omega0, std::move(omega1), std::move(omega2)};
}

Rational h2q(const CurvatureTensor& r, int q) {
  const int n = r.dim();
  if (q < 1) throw std::domain_error("h_{2q} needs q >= 1");
  if (2 * q > n) {
    std::ostringstream os;
    os << "h_{2q} undefined: 2q = " << 2 * q << " exceeds n = " << n;
    throw std::domain_error(os.str());
  }
  const DoubleForm rq = power(r.form(), q);
  const Rational via_contraction =
      as_scalar(contract_times(rq, 2 * q)) / rational_factorial(2 * q);
  const Rational via_star =
      as_scalar(hodge_star(product(DoubleForm::metric_power(n, n - 2 * q), rq))) /
      rational_factorial(n - 2 * q);
  if (via_contraction != via_star) {
    throw std::logic_error("contraction and star routes for h_{2q} disagree");
  }
  return via_contraction;
}

Rational h2q_contraction(const CurvatureTensor& r, int q) {
  if (q < 1) throw std::domain_error("h_{2q} needs q >= 1");
  const DoubleForm rq = power(r.form(), q);
  if (rq.rows() == 0 || rq.cols() == 0) return Rational(0);
  return as_scalar(contract_times(rq, 2 * q)) / rational_factorial(2 * q);
}

Rational h4_formal(const CurvatureTensor& r) {
  const DoubleForm ric = ricci(r);
  const Rational scal = as_scalar(contract(ric));
  return norm_sq(r.form()) - norm_sq(ric) + scal * scal / 4;
}

NormSplit norm_formulas(const CurvatureTensor& r) {
  require_dim(r, 4, "norm split");
  const int n = r.dim();
  const Rational r_sq = norm_sq(r.form());
  const DoubleForm ric = ricci(r);
  const Rational ric_sq = norm_sq(ric);
  const Rational scal = as_scalar(contract(ric));
  const Rational scal_sq = scal * scal;

  NormSplit split;
  split.omega2_sq = r_sq - ric_sq / Rational(n - 2) +
                    scal_sq / Rational(2 * (n - 1) * (n - 2));
  split.omega1_sq =
      (ric_sq - scal_sq / Rational(n)) / Rational((n - 2) * (n - 2));
  split.omega0_sq = scal_sq / Rational(4 * n * n * (n - 1) * (n - 1));

  const WeylDecomposition dec = decompose(r);
  if (split.omega2_sq != norm_sq(dec.omega2) ||
      split.omega1_sq != norm_sq(dec.omega1) ||
      split.omega0_sq != dec.omega0 * dec.omega0) {
    throw std::logic_error("norm formulas disagree with direct decomposition norms");
  }
  return split;
}

EinsteinCheck einstein_check(const CurvatureTensor& r) {
  const int n = r.dim();
  const DoubleForm ric = ricci(r);
  const Rational scal = as_scalar(contract(ric));
  const DoubleForm dev = ric - DoubleForm::metric(n) * (scal / Rational(n));
  const Rational dev_sq = norm_sq(dev);
  return EinsteinCheck{dev_sq == 0, dev_sq};
}

InvariantReport h4_report(const CurvatureTensor& r) {
  require_dim(r, 4, "h4 report");
  const int n = r.dim();
  InvariantReport rep;
  rep.n = n;

  const DoubleForm ric = ricci(r);
  rep.norm_r_sq = norm_sq(r.form());
  rep.norm_ricci_sq = norm_sq(ric);
  rep.scal = as_scalar(contract(ric));
  rep.scal_sq = rep.scal * rep.scal;
  rep.h4_direct = rep.norm_r_sq - rep.norm_ricci_sq + rep.scal_sq / 4;

  const WeylDecomposition dec = decompose(r);
  rep.omega0 = dec.omega0;
  rep.norm_omega0_sq = dec.omega0 * dec.omega0;
  rep.norm_omega1_sq = norm_sq(dec.omega1);
  rep.norm_omega2_sq = norm_sq(dec.omega2);
  rep.h4_decomposed = (rational_factorial(n) * rep.norm_omega0_sq -
                       rational_factorial(n - 2) * rep.norm_omega1_sq) /
                          rational_factorial(n - 4) +
                      rep.norm_omega2_sq;

  rep.h4_contraction = h2q(r, 2);
  rep.h4_agree =
      rep.h4_direct == rep.h4_decomposed && rep.h4_direct == rep.h4_contraction;

  for (int q = 1; 2 * q <= n; ++q) rep.h2q.emplace_back(q, h2q(r, q));

  const EinsteinCheck ec = einstein_check(r);
  rep.is_einstein = ec.is_einstein;
  rep.einstein_deviation_sq = ec.deviation_sq;
  return rep;
}

}  // namespace weylcurv
