#include <doctest.h>

#include "weylcurv/curvature.hpp"
#include "weylcurv/models.hpp"

using namespace weylcurv;

namespace {

MultiIndex mi(std::initializer_list<int> idx, int n) {
  const std::vector<int> v(idx);
  return MultiIndex::from_indices(v, n);
}

}  // namespace

TEST_CASE("unit four-sphere invariants") {
  const CurvatureTensor r = models::constant_curvature(4, Rational(1));
  CHECK(ricci(r) == DoubleForm::metric(4) * Rational(3));
  CHECK(scalar_curv(r) == Rational(12));

  const WeylDecomposition dec = decompose(r);
  CHECK(dec.omega0 == Rational(1, 2));
  CHECK(dec.omega1.is_zero());
  CHECK(dec.omega2.is_zero());

  CHECK(h2q(r, 1) == Rational(6));  // half the scalar curvature
  CHECK(h2q(r, 2) == Rational(6));

  const InvariantReport rep = h4_report(r);
  CHECK(rep.norm_r_sq == Rational(6));
  CHECK(rep.norm_ricci_sq == Rational(36));
  CHECK(rep.scal_sq == Rational(144));
  CHECK(rep.h4_direct == Rational(6));
  CHECK(rep.h4_decomposed == Rational(6));
  CHECK(rep.h4_contraction == Rational(6));
  CHECK(rep.h4_agree);
  CHECK(rep.is_einstein);
  CHECK(rep.einstein_deviation_sq == Rational(0));

  const NormSplit split = norm_formulas(r);
  CHECK(split.omega2_sq == Rational(0));
  CHECK(split.omega1_sq == Rational(0));
  CHECK(split.omega0_sq == Rational(1, 4));
}

TEST_CASE("five-sphere and flat space") {
  CHECK(h2q(models::constant_curvature(5, Rational(1)), 2) == Rational(30));

  const CurvatureTensor zero = models::flat(5);
  CHECK(ricci(zero).is_zero());
  CHECK(scalar_curv(zero) == Rational(0));
  CHECK(h4_formal(zero) == Rational(0));
}

TEST_CASE("sphere times sphere") {
  const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
  const CurvatureTensor prod = models::product_tensor(s4, s4);
  const InvariantReport rep = h4_report(prod);
  CHECK(rep.h4_direct == Rational(84));
  CHECK(rep.h4_agree);
  CHECK(rep.is_einstein);  // both factors share the Einstein constant 3

  // contraction respects the direct-sum blocks: Ric = 3g on each factor
  const DoubleForm ric = ricci(prod);
  CHECK(ric == DoubleForm::metric(8) * Rational(3));
}

TEST_CASE("hypersurface diag(1,2,3,4)") {
  const CurvatureTensor r =
      models::hypersurface({Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(scalar_curv(r) == Rational(70));  // 2 σ₂ = 2·35
  CHECK(h2q(r, 2) == Rational(144));      // 6 σ₄ = 6·24
  const EinsteinCheck ec = einstein_check(r);
  CHECK_FALSE(ec.is_einstein);
  CHECK(ec.deviation_sq > 0);
}

TEST_CASE("conformally flat tensors") {
  const CurvatureTensor r = models::conformally_flat(
      {Rational(1), Rational(1), Rational(-1), Rational(-1)});
  CHECK(scalar_curv(r) == Rational(0));
  const InvariantReport rep = h4_report(r);
  CHECK(rep.h4_direct == Rational(-8));
  CHECK(rep.h4_agree);
  CHECK(decompose(r).omega2.is_zero());

  // the Weyl part vanishes for R = g·h with generic symmetric h as well
  Rng rng(29);
  for (int n = 4; n <= 6; ++n) {
    const DoubleForm h = models::random_symmetric_11(n, rng);
    const CurvatureTensor gh = models::conformally_flat_form(h);
    CHECK(decompose(gh).omega2.is_zero());
  }
}

TEST_CASE("decomposition invariants on random tensors") {
  Rng rng(31);
  for (int n = 4; n <= 6; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const CurvatureTensor r = models::random_bianchi(n, rng.next(), 2);
      const WeylDecomposition dec = decompose(r);

      // exact reconstruction
      const DoubleForm rebuilt = dec.omega2 + metric_mult(dec.omega1) +
                                 DoubleForm::metric_power(n, 2) * dec.omega0;
      CHECK(rebuilt == r.form());

      // effectiveness of the parts
      CHECK(trace(dec.omega1) == Rational(0));
      CHECK(contract(dec.omega2).is_zero());
      CHECK(is_slot_symmetric(dec.omega2));

      // mutual orthogonality
      const DoubleForm g_w1 = metric_mult(dec.omega1);
      const DoubleForm g2_w0 = DoubleForm::metric_power(n, 2) * dec.omega0;
      CHECK(inner_product(dec.omega2, g_w1) == Rational(0));
      CHECK(inner_product(dec.omega2, g2_w0) == Rational(0));
      CHECK(inner_product(g_w1, g2_w0) == Rational(0));

      // Einstein-ized tensors drop the middle part exactly
      const CurvatureTensor e = models::einsteinize(r);
      CHECK(decompose(e).omega1.is_zero());
      CHECK(h4_report(r).h4_agree);
    }
  }
}

TEST_CASE("dimension guards") {
  const CurvatureTensor r3 = models::constant_curvature(3, Rational(1));
  CHECK(scalar_curv(r3) == Rational(6));  // building-block contractions still work
  CHECK_THROWS_AS(decompose(r3), std::domain_error);
  CHECK_THROWS_AS(h4_report(r3), std::domain_error);
  CHECK_THROWS_AS(h2q(r3, 2), std::domain_error);
  CHECK(h2q_contraction(r3, 2) == Rational(0));  // formal value, R² annihilates
  CHECK(h4_formal(r3) == Rational(0));
}

TEST_CASE("curvature tensor validation") {
  // slot-asymmetric input is rejected
  DoubleForm asym(4, 2, 2);
  asym.set_coeff(mi({0, 1}, 4), mi({0, 2}, 4), Rational(1));
  CHECK_THROWS_AS(CurvatureTensor{asym}, std::invalid_argument);

  // Bianchi-violating input is rejected with the defect in the message
  DoubleForm bad(4, 2, 2);
  bad.set_coeff(mi({0, 1}, 4), mi({2, 3}, 4), Rational(1));
  bad.set_coeff(mi({2, 3}, 4), mi({0, 1}, 4), Rational(1));
  CHECK_THROWS_WITH_AS(CurvatureTensor{bad},
                       "first Bianchi identity violated, defect = 1",
                       std::invalid_argument);
}
