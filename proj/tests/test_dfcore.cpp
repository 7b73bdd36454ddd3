#include <doctest.h>

#include "weylcurv/double_form.hpp"
#include "weylcurv/models.hpp"
#include "weylcurv/random.hpp"

using namespace weylcurv;

namespace {

MultiIndex mi(std::initializer_list<int> idx, int n) {
  const std::vector<int> v(idx);
  return MultiIndex::from_indices(v, n);
}

}  // namespace

TEST_CASE("metric product: the hand-expanded shuffle sum") {
  const DoubleForm g = DoubleForm::metric(4);
  const DoubleForm g2 = product(g, g);
  // g²(e0,e1; e0,e1) expands to a 4-term shuffle sum equal to 2
  const int xs[] = {0, 1};
  CHECK(g2.eval_basis(xs, xs) == Rational(2));
  CHECK(g2 == DoubleForm::metric_power(4, 2));

  // (λ/2)g² with λ = 1 has unit sectional coefficients
  const DoubleForm r = g2 * Rational(1, 2);
  CHECK(r.coeff(mi({0, 1}, 4), mi({0, 1}, 4)) == Rational(1));
}

TEST_CASE("product with zero and beyond top degree") {
  Rng rng(3);
  const DoubleForm a = models::random_form(4, 1, 2, rng);
  const DoubleForm zero(4, 2, 1);
  CHECK(product(a, zero).is_zero());

  // degree overflow annihilates: zero form, no error
  const DoubleForm b = models::random_form(4, 3, 2, rng);
  const DoubleForm c = models::random_form(4, 2, 3, rng);
  const DoubleForm over = product(b, c);
  CHECK(over.deg_p() == 5);
  CHECK(over.is_zero());
  CHECK(DoubleForm::metric_power(4, 5).is_zero());
}

TEST_CASE("contraction of metric powers") {
  CHECK(contract(DoubleForm::metric(5)) == DoubleForm::scalar(5, Rational(5)));
  CHECK(contract(DoubleForm::metric_power(4, 2)) == DoubleForm::metric(4) * Rational(6));

  // c²(½g²) = 12 = scal of the unit four-sphere
  const DoubleForm r = DoubleForm::metric_power(4, 2) * Rational(1, 2);
  CHECK(contract_times(r, 2) == DoubleForm::scalar(4, Rational(12)));

  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(contract(DoubleForm::metric_power(n, k)) ==
            DoubleForm::metric_power(n, k - 1) * Rational(k * (n - k + 1)));
    }
  }
  CHECK_THROWS(contract(DoubleForm::scalar(4, Rational(1))));
}

TEST_CASE("metric multiplication is the ring unit action") {
  CHECK(metric_mult(DoubleForm::scalar(4, Rational(1))) == DoubleForm::metric(4));
  CHECK(metric_mult(DoubleForm::metric(4)) == DoubleForm::metric_power(4, 2));
  // two metric multiplications of ω₀ = ½ give the unit-sphere tensor
  const DoubleForm half = DoubleForm::scalar(4, Rational(1, 2));
  CHECK(metric_mult(metric_mult(half)) ==
        DoubleForm::metric_power(4, 2) * Rational(1, 2));
}

TEST_CASE("hodge star conventions") {
  Rng rng(11);
  // ** is the identity on (1,1) forms in n=4: sign exponent (1+1)(4-2) is even
  const DoubleForm w = models::random_form(4, 1, 1, rng);
  CHECK(hodge_star(hodge_star(w)) == w);

  // top-degree normalization: *(c · e_all ⊗ e_all) = c
  DoubleForm top(3, 3, 3);
  top.set_coeff(mi({0, 1, 2}, 3), mi({0, 1, 2}, 3), Rational(7, 3));
  CHECK(hodge_star(top) == DoubleForm::scalar(3, Rational(7, 3)));

  // gω = *c*ω on random input, exactly on even-parity bidegrees and up to
  // the star-convention sign (-1)^{n(p+q)} otherwise
  for (int n = 3; n <= 4; ++n) {
    for (int p = 0; p <= n - 1; ++p) {
      for (int q = 0; q <= n - 1; ++q) {
        const DoubleForm omega = models::random_form(n, p, q, rng);
        const DoubleForm via_star = hodge_star(contract(hodge_star(omega)));
        if ((n * (p + q)) % 2 == 0) {
          CHECK(metric_mult(omega) == via_star);
        } else {
          CHECK(metric_mult(omega) == -via_star);
        }
      }
    }
  }

  // double star sign across bidegrees
  for (int n = 3; n <= 5; ++n) {
    for (int p = 0; p <= n; ++p) {
      for (int q = 0; q <= n; ++q) {
        const DoubleForm omega = models::random_form(n, p, q, rng, 2);
        const int expo = (p + q) * (n - p - q);
        const DoubleForm twice = hodge_star(hodge_star(omega));
        if (expo % 2 == 0) {
          CHECK(twice == omega);
        } else {
          CHECK(twice == -omega);
        }
      }
    }
  }
}

TEST_CASE("inner product and adjointness") {
  const DoubleForm g2 = DoubleForm::metric_power(4, 2);
  // each of the C(4,2) diagonal entries contributes 4
  CHECK(norm_sq(g2) == Rational(24));

  Rng rng(5);
  const DoubleForm a = models::random_form(4, 2, 1, rng);
  CHECK(inner_product(a, DoubleForm(4, 2, 1)) == Rational(0));

  for (int n = 3; n <= 5; ++n) {
    const DoubleForm w1 = models::random_form(n, 1, 1, rng);
    const DoubleForm w2 = models::random_form(n, 2, 2, rng);
    CHECK(inner_product(metric_mult(w1), w2) == inner_product(w1, contract(w2)));

    // the star expression of the inner product; the mirrored order carries
    // the double-star sign, which is + on every symmetric bidegree
    const DoubleForm u = models::random_form(n, 1, 2, rng);
    const DoubleForm v = models::random_form(n, 1, 2, rng);
    const Rational ip = inner_product(u, v);
    CHECK(hodge_star(product(u, hodge_star(v))) == DoubleForm::scalar(n, ip));
    const int expo = (1 + 2) * (n - 1 - 2);
    const Rational mirrored = expo % 2 == 0 ? ip : -ip;
    CHECK(hodge_star(product(hodge_star(u), v)) == DoubleForm::scalar(n, mirrored));

    const DoubleForm s1 = models::random_form(n, 2, 2, rng);
    const DoubleForm s2 = models::random_form(n, 2, 2, rng);
    const Rational ips = inner_product(s1, s2);
    CHECK(hodge_star(product(hodge_star(s1), s2)) == DoubleForm::scalar(n, ips));
  }
}

TEST_CASE("first Bianchi defect") {
  CHECK(first_bianchi_defect(DoubleForm::metric_power(4, 2)) == Rational(0));

  Rng rng(17);
  for (int n = 3; n <= 6; ++n) {
    const DoubleForm h = models::random_symmetric_11(n, rng);
    CHECK(first_bianchi_defect(product(h, h)) == Rational(0));
  }

  // single symmetrized coefficient pair at ({0,1},{2,3}): defect exactly 1
  DoubleForm w(4, 2, 2);
  w.set_coeff(mi({0, 1}, 4), mi({2, 3}, 4), Rational(1));
  w.set_coeff(mi({2, 3}, 4), mi({0, 1}, 4), Rational(1));
  CHECK(first_bianchi_defect(w) == Rational(1));

  CHECK_THROWS(first_bianchi_defect(DoubleForm::metric(4)));
}

TEST_CASE("symmetric subring is commutative and product is associative") {
  Rng rng(23);
  for (int n = 4; n <= 5; ++n) {
    const DoubleForm a = models::random_symmetric_11(n, rng);
    const DoubleForm b = models::random_symmetric_11(n, rng);
    const DoubleForm c = models::random_symmetric_11(n, rng);
    CHECK(product(a, b) == product(b, a));
    CHECK(product(product(a, b), product(c, c)) ==
          product(a, product(b, product(c, c))));
    CHECK(is_slot_symmetric(product(a, b)));
  }
}

TEST_CASE("multi-index and shape validation") {
  const int bad[] = {2, 1};
  CHECK_THROWS(MultiIndex::from_indices(bad, 4));
  const int oob[] = {0, 7};
  CHECK_THROWS(MultiIndex::from_indices(oob, 4));

  const DoubleForm a(4, 1, 1), b(5, 1, 1);
  CHECK_THROWS(product(a, b));
  CHECK_THROWS(inner_product(a, DoubleForm(4, 2, 2)));

  // evaluation is antisymmetric in each slot
  const DoubleForm g2 = DoubleForm::metric_power(4, 2);
  const int fwd[] = {0, 1}, rev[] = {1, 0}, rep[] = {1, 1};
  CHECK(g2.eval_basis(fwd, rev) == Rational(-2));
  CHECK(g2.eval_basis(rep, fwd) == Rational(0));
}
