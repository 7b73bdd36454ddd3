#include <doctest.h>

#include "weylcurv/curvature.hpp"
#include "weylcurv/models.hpp"

using namespace weylcurv;

TEST_CASE("constant curvature generator") {
  CHECK(h2q(models::constant_curvature(4, Rational(1)), 2) == Rational(6));
  CHECK(models::constant_curvature(5, Rational(0)).form().is_zero());
  // n=6, lambda=2: 6·5·4·3/4 · 4
  CHECK(h2q(models::constant_curvature(6, Rational(2)), 2) == Rational(360));
}

TEST_CASE("product generator") {
  const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
  CHECK(h2q(models::product_tensor(s4, s4), 2) == Rational(84));

  // a flat line leaves h4 unchanged
  CHECK(h2q(models::product_tensor(s4, models::flat(1)), 2) == Rational(6));

  // the odd-dimension device: S^5 x S^1 keeps h4 = 30
  const CurvatureTensor s5 = models::constant_curvature(5, Rational(1));
  CHECK(h2q(models::product_tensor(s5, models::flat(1)), 2) == Rational(30));
}

TEST_CASE("hypersurface generator") {
  // the round sphere as a hypersurface: B = Id reproduces constant curvature
  const CurvatureTensor unit = models::hypersurface(
      {Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(unit == models::constant_curvature(4, Rational(1)));
  CHECK(h2q(unit, 2) == Rational(6));

  const CurvatureTensor r =
      models::hypersurface({Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(h2q(r, 2) == Rational(144));
  CHECK(scalar_curv(r) == Rational(70));

  CHECK(models::hypersurface(std::vector<Rational>(5, Rational(0))).form().is_zero());
}

TEST_CASE("conformally flat generator") {
  const CurvatureTensor r = models::conformally_flat(std::vector<Rational>(4, Rational(1)));
  CHECK(r == models::constant_curvature(4, Rational(2)));
  CHECK(h2q(r, 2) == Rational(24));

  const CurvatureTensor mixed = models::conformally_flat(
      {Rational(1), Rational(1), Rational(-1), Rational(-1)});
  CHECK(scalar_curv(mixed) == Rational(0));
  CHECK(h2q(mixed, 2) == Rational(-8));

  CHECK(models::conformally_flat(std::vector<Rational>(4, Rational(0))).form().is_zero());
}

TEST_CASE("metric rescaling") {
  const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
  CHECK(h2q(models::scale_metric(s4, Rational(4)), 2) == Rational(6, 16));
  CHECK(models::scale_metric(s4, Rational(1)) == s4);

  const CurvatureTensor r = models::random_bianchi(5, 99, 3);
  CHECK(models::scale_metric(models::scale_metric(r, Rational(1, 4)), Rational(4)) == r);
  CHECK_THROWS(models::scale_metric(r, Rational(0)));
}

TEST_CASE("random Bianchi generator") {
  // fixed seed reproduces bit for bit
  const CurvatureTensor a = models::random_bianchi(5, 1234, 3);
  const CurvatureTensor b = models::random_bianchi(5, 1234, 3);
  CHECK(a == b);
  CHECK_FALSE(a == models::random_bianchi(5, 1235, 3));
  CHECK(first_bianchi_defect(a.form()) == Rational(0));
  CHECK(is_slot_symmetric(a.form()));

  // the h = g, c = ½ term is the unit sphere
  const DoubleForm g = DoubleForm::metric(4);
  CHECK(CurvatureTensor(product(g, g) * Rational(1, 2)) ==
        models::constant_curvature(4, Rational(1)));
}

TEST_CASE("einsteinize") {
  const CurvatureTensor s4 = models::constant_curvature(4, Rational(1));
  CHECK(models::einsteinize(s4) == s4);

  const CurvatureTensor r =
      models::hypersurface({Rational(1), Rational(2), Rational(3), Rational(4)});
  const CurvatureTensor e = models::einsteinize(r);
  CHECK(einstein_check(e).is_einstein);
  CHECK(h4_formal(e) >= 0);
  CHECK(scalar_curv(e) == scalar_curv(r));
  CHECK(models::einsteinize(e) == e);

  // scalar and Weyl parts pass through untouched
  const WeylDecomposition before = decompose(r);
  const WeylDecomposition after = decompose(e);
  CHECK(before.omega0 == after.omega0);
  CHECK(before.omega2 == after.omega2);
  CHECK(after.omega1.is_zero());
}
