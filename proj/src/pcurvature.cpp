#include "weylcurv/pcurvature.hpp"

#include <cmath>
#include <stdexcept>

namespace weylcurv {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

PPlane::PPlane(int n, std::vector<std::vector<double>> vectors)
    : n_(n), vectors_(std::move(vectors)) {
  if (static_cast<int>(vectors_.size()) > n_) {
    throw std::invalid_argument("plane degree exceeds dimension");
  }
  for (const auto& v : vectors_) {
    if (static_cast<int>(v.size()) != n_) {
      throw std::invalid_argument("plane vector has wrong dimension");
    }
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    for (std::size_t j = i; j < vectors_.size(); ++j) {
      const double g = dot(vectors_[i], vectors_[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(g - want) > kFrameTol) {
        throw std::invalid_argument("plane vectors are not orthonormal");
      }
    }
  }
}

CurvatureEvaluator::CurvatureEvaluator(const CurvatureTensor& r) : n_(r.dim()) {
  keys_ = subsets_of_degree(n_, 2);
  const auto raw = r.form().raw();
  coeffs_.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) coeffs_[i] = to_double(raw[i]);
}

double CurvatureEvaluator::pair_value(std::span<const double> x,
                                      std::span<const double> y) const {
  const std::size_t m = keys_.size();
  std::vector<double> minors(m);
  for (std::size_t a = 0; a < m; ++a) {
    const Mask key = keys_[a];
    const int i = std::countr_zero(key);
    const int j = std::countr_zero(key & (key - 1));
    minors[a] = x[i] * y[j] - x[j] * y[i];
  }
  double out = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    if (minors[a] == 0.0) continue;
    const double* row = coeffs_.data() + a * m;
    double acc = 0.0;
    for (std::size_t b = 0; b < m; ++b) acc += row[b] * minors[b];
    out += minors[a] * acc;
  }
  return out;
}

double sectional(const CurvatureTensor& r, std::span<const double> e,
                 std::span<const double> f, double tol) {
  if (std::abs(dot(e, e) - 1.0) > tol || std::abs(dot(f, f) - 1.0) > tol ||
      std::abs(dot(e, f)) > tol) {
    throw std::invalid_argument("sectional curvature needs an orthonormal pair");
  }
  return CurvatureEvaluator(r).pair_value(e, f);
}

std::vector<std::vector<double>> orthonormal_complement(const PPlane& plane) {
  const int n = plane.dim();
  const int p = plane.degree();
  std::vector<std::vector<double>> basis;
  basis.reserve(n - p);
  for (int axis = 0; axis < n && static_cast<int>(basis.size()) < n - p; ++axis) {
    std::vector<double> v(n, 0.0);
    v[axis] = 1.0;
    for (const auto& u : plane.vectors()) {
      const double c = dot(v, u);
      for (int i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    for (const auto& u : basis) {
      const double c = dot(v, u);
      for (int i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    const double len = std::sqrt(dot(v, v));
    if (len < 1e-8) continue;  // axis nearly inside the span
    for (double& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  if (static_cast<int>(basis.size()) != n - p) {
    throw std::runtime_error("failed to complete an orthonormal complement");
  }
  return basis;
}

double p_curvature(const CurvatureEvaluator& eval, const PPlane& plane) {
  if (plane.dim() != eval.dim()) {
    throw std::invalid_argument("plane dimension does not match tensor");
  }
  if (plane.degree() > plane.dim() - 2) {
    throw std::invalid_argument("p-curvature needs p <= n-2");
  }
  const auto basis = orthonormal_complement(plane);
  double sum = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      sum += 2.0 * eval.pair_value(basis[i], basis[j]);
    }
  }
  return sum;
}

double p_curvature(const CurvatureTensor& r, const PPlane& plane) {
  return p_curvature(CurvatureEvaluator(r), plane);
}

PPlane sample_plane(int n, int p, Rng& rng) {
  std::vector<std::vector<double>> vecs;
  vecs.reserve(p);
  while (static_cast<int>(vecs.size()) < p) {
    std::vector<double> v(n);
    for (double& x : v) x = rng.gaussian();
    for (const auto& u : vecs) {
      const double c = dot(v, u);
      for (int i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    // second orthogonalization pass for numerical safety near kFrameTol
    for (const auto& u : vecs) {
      const double c = dot(v, u);
      for (int i = 0; i < n; ++i) v[i] -= c * u[i];
    }
    const double len = std::sqrt(dot(v, v));
    if (len < 1e-6) continue;  // resample a degenerate draw
    for (double& x : v) x /= len;
    vecs.push_back(std::move(v));
  }
  return PPlane(n, std::move(vecs));
}

TheoremAReport verify_theorem_a(
    const CurvatureTensor& r, int samples, std::uint64_t seed,
    const std::optional<Rational>& constant_curvature_lambda) {
  const int n = r.dim();
  if (n < 4) throw std::domain_error("theorem A verification needs n >= 4");
  TheoremAReport rep;
  rep.n = n;
  rep.p = (n + 1) / 2;
  rep.samples = samples;

  const CurvatureEvaluator eval(r);
  Rng rng(seed);
  double min_sp = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PPlane plane = sample_plane(n, rep.p, rng);
    const double sp = p_curvature(eval, plane);
    if (s == 0 || sp < min_sp) min_sp = sp;
  }
  rep.min_sp = min_sp;
  rep.hypothesis_sampled_positive = min_sp > 0.0;
  if (constant_curvature_lambda) {
    // closed form s_p = (n−p)(n−p−1)λ on every plane
    rep.certified = *constant_curvature_lambda > 0;
  }
  rep.h4 = h4_formal(r);
  rep.conclusion_ok = !(rep.hypothesis_sampled_positive && rep.h4 <= 0);
  return rep;
}

}  // namespace weylcurv
