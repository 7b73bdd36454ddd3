#include "weylcurv/models.hpp"

#include <stdexcept>

namespace weylcurv {
namespace models {

namespace {

MultiIndex single(int i) { return MultiIndex{Mask{1} << i}; }

}  // namespace

CurvatureTensor constant_curvature(int n, const Rational& lambda) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  return CurvatureTensor(DoubleForm::metric_power(n, 2) * (lambda / 2));
}

CurvatureTensor flat(int n) { return constant_curvature(n, Rational(0)); }

CurvatureTensor product_tensor(const CurvatureTensor& a, const CurvatureTensor& b) {
  const int n1 = a.dim(), n2 = b.dim(), n = n1 + n2;
  DoubleForm out(n, 2, 2);
  a.form().for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
    out.set_coeff(MultiIndex{i}, MultiIndex{j}, c);
  });
  b.form().for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
    out.set_coeff(MultiIndex{i << n1}, MultiIndex{j << n1}, c);
  });
  return CurvatureTensor(std::move(out));
}

CurvatureTensor hypersurface(const std::vector<Rational>& eigenvalues) {
  const int n = static_cast<int>(eigenvalues.size());
  if (n < 2) throw std::invalid_argument("hypersurface needs n >= 2");
  DoubleForm b(n, 1, 1);
  for (int i = 0; i < n; ++i) b.set_coeff(single(i), single(i), eigenvalues[i]);
  return CurvatureTensor(product(b, b) * Rational(1, 2));
}

CurvatureTensor conformally_flat(const std::vector<Rational>& h_eigenvalues) {
  const int n = static_cast<int>(h_eigenvalues.size());
  if (n < 2) throw std::invalid_argument("conformally flat tensor needs n >= 2");
  DoubleForm h(n, 1, 1);
  for (int i = 0; i < n; ++i) h.set_coeff(single(i), single(i), h_eigenvalues[i]);
  return conformally_flat_form(h);
}

CurvatureTensor conformally_flat_form(const DoubleForm& h) {
  if (h.deg_p() != 1 || h.deg_q() != 1 || !is_slot_symmetric(h)) {
    throw std::invalid_argument("conformally flat tensor needs a symmetric (1,1) form");
  }
  return CurvatureTensor(metric_mult(h));
}

CurvatureTensor scale_metric(const CurvatureTensor& r, const Rational& t) {
  if (t <= 0) throw std::invalid_argument("metric scale factor must be positive");
  return CurvatureTensor(r.form() * (Rational(1) / t));
}

CurvatureTensor random_bianchi(int n, std::uint64_t seed, int terms) {
  if (n < 2) throw std::invalid_argument("random tensor needs n >= 2");
  if (terms < 1) throw std::invalid_argument("need at least one generator term");
  Rng rng(seed);
  DoubleForm sum(n, 2, 2);
  for (int t = 0; t < terms; ++t) {
    const DoubleForm h = random_symmetric_11(n, rng);
    const Rational num(rng.uniform_int(0, 1) ? 1 : -1);
    const Rational den(1 + rng.uniform_int(0, 1));
    sum += product(h, h) * (num / den);
  }
  return CurvatureTensor(std::move(sum));
}

CurvatureTensor einsteinize(const CurvatureTensor& r) {
  const WeylDecomposition dec = decompose(r);
  return CurvatureTensor(r.form() - metric_mult(dec.omega1));
}

DoubleForm random_form(int n, int p, int q, Rng& rng, int max_abs) {
  DoubleForm out(n, p, q);
  const auto& rows = subsets_of_degree(n, p);
  const auto& cols = subsets_of_degree(n, q);
  for (Mask i : rows) {
    for (Mask j : cols) {
      out.set_coeff(MultiIndex{i}, MultiIndex{j},
                    Rational(rng.uniform_int(-max_abs, max_abs)));
    }
  }
  return out;
}

DoubleForm random_symmetric_11(int n, Rng& rng, int max_abs) {
  DoubleForm out(n, 1, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Rational v(rng.uniform_int(-max_abs, max_abs));
      out.set_coeff(single(i), single(j), v);
      out.set_coeff(single(j), single(i), v);
    }
  }
  return out;
}

DoubleForm random_traceless_symmetric_11(int n, Rng& rng, int max_abs) {
  DoubleForm h = random_symmetric_11(n, rng, max_abs);
  return h - DoubleForm::metric(n) * (trace(h) / Rational(n));
}

DoubleForm random_effective_22(int n, Rng& rng, int max_abs) {
  const DoubleForm omega = random_form(n, 2, 2, rng, max_abs);
  // Project out the g- and g²-multiples using c(gω) = g·cω + (n−p−q)ω.
  const DoubleForm c1 = contract(omega);
  const Rational c2 = contract(c1).raw()[0];
  const Rational a = c2 / Rational(2 * n * (n - 1));
  const DoubleForm phi =
      (c1 - DoubleForm::metric(n) * (c2 / Rational(n))) * (Rational(1) / Rational(n - 2));
  return omega - metric_mult(phi) - DoubleForm::metric_power(n, 2) * a;
}

}  // namespace models
}  // namespace weylcurv
