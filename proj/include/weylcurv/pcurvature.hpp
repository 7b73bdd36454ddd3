#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "weylcurv/curvature.hpp"
#include "weylcurv/random.hpp"

namespace weylcurv {

/// Tolerance for orthonormality of sampled frames.
inline constexpr double kFrameTol = 1e-12;

/// A tangent p-plane given by p orthonormal n-vectors (float backend).
class PPlane {
 public:
  PPlane(int n, std::vector<std::vector<double>> vectors);

  int dim() const { return n_; }
  int degree() const { return static_cast<int>(vectors_.size()); }
  const std::vector<std::vector<double>>& vectors() const { return vectors_; }

 private:
  int n_;
  std::vector<std::vector<double>> vectors_;
};

/// Double-precision view of a curvature tensor for sampling loops.
class CurvatureEvaluator {
 public:
  explicit CurvatureEvaluator(const CurvatureTensor& r);

  int dim() const { return n_; }
  /// R(x,y;x,y) under the multilinear extension.
  double pair_value(std::span<const double> x, std::span<const double> y) const;

 private:
  int n_;
  std::vector<Mask> keys_;
  std::vector<double> coeffs_;  // dense over key pairs
};

/// Sectional curvature R(e,f;e,f) of an orthonormal pair.
double sectional(const CurvatureTensor& r, std::span<const double> e,
                 std::span<const double> f, double tol = kDefaultAbsTol);

/// Orthonormal basis of the orthogonal complement of the plane.
std::vector<std::vector<double>> orthonormal_complement(const PPlane& plane);

/// p-curvature s_p: Σ_{i≠j} R(f_i,f_j;f_i,f_j) over an orthonormal basis of
/// P⊥. Basis-independent; s₀ is the scalar curvature and s_{n−2} twice the
/// sectional curvature. Requires p ≤ n−2.
double p_curvature(const CurvatureTensor& r, const PPlane& plane);
double p_curvature(const CurvatureEvaluator& eval, const PPlane& plane);

/// Uniform random p-plane: orthonormalized Gaussian frame (invariant measure).
PPlane sample_plane(int n, int p, Rng& rng);

struct TheoremAReport {
  int n = 0;
  int p = 0;  // ⌊(n+1)/2⌋
  int samples = 0;
  double min_sp = 0.0;
  /// Sampling can only report the hypothesis as sampled-true; it certifies
  /// nothing. `certified` is set only for constant-curvature inputs, where
  /// s_p has the closed form (n−p)(n−p−1)λ.
  bool hypothesis_sampled_positive = false;
  bool certified = false;
  Rational h4;  // exact, from the rational tensor
  /// False would mean (min sampled s_p > 0) ∧ (h4 ≤ 0): an implementation bug.
  bool conclusion_ok = true;
};

TheoremAReport verify_theorem_a(
    const CurvatureTensor& r, int samples, std::uint64_t seed,
    const std::optional<Rational>& constant_curvature_lambda = std::nullopt);

}  // namespace weylcurv
