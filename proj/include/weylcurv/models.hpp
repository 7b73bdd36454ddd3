#pragma once

#include <cstdint>
#include <vector>

#include "weylcurv/curvature.hpp"
#include "weylcurv/random.hpp"

namespace weylcurv {
namespace models {

/// R = (λ/2)g²: constant sectional curvature λ.
CurvatureTensor constant_curvature(int n, const Rational& lambda);

CurvatureTensor flat(int n);

/// Block embedding of two curvature tensors on the direct-sum frame;
/// cross-block coefficients are zero.
CurvatureTensor product_tensor(const CurvatureTensor& a, const CurvatureTensor& b);

/// Hypersurface of Euclidean space with diagonal second fundamental form:
/// R = ½B².
CurvatureTensor hypersurface(const std::vector<Rational>& eigenvalues);

/// Conformally flat tensor R = g·h for diagonal h.
CurvatureTensor conformally_flat(const std::vector<Rational>& h_eigenvalues);

/// Conformally flat tensor R = g·h for an arbitrary symmetric (1,1) form h.
CurvatureTensor conformally_flat_form(const DoubleForm& h);

/// Curvature data of the rescaled metric g_t = t·g, represented in the
/// g_t-orthonormal frame (coefficients divide by t), so that
/// h_{2q}(scaled) = t^{−q} h_{2q}(R) holds identically. Requires t > 0.
CurvatureTensor scale_metric(const CurvatureTensor& r, const Rational& t);

/// Σᵢ cᵢ·hᵢ·hᵢ over random symmetric (1,1) forms with small integer entries;
/// satisfies the first Bianchi identity by construction. Deterministic in
/// (seed, terms).
CurvatureTensor random_bianchi(int n, std::uint64_t seed, int terms);

/// R − g·ω₁: kills the traceless Ricci part, leaving scalar curvature and
/// Weyl part unchanged. Output passes einstein_check exactly. Requires n ≥ 4.
CurvatureTensor einsteinize(const CurvatureTensor& r);

/// Random rational test vectors used by the property suites.
DoubleForm random_form(int n, int p, int q, Rng& rng, int max_abs = 3);
DoubleForm random_symmetric_11(int n, Rng& rng, int max_abs = 3);
DoubleForm random_traceless_symmetric_11(int n, Rng& rng, int max_abs = 3);
/// Random (2,2) form projected onto ker c (the effective part).
DoubleForm random_effective_22(int n, Rng& rng, int max_abs = 3);

}  // namespace models
}  // namespace weylcurv
