#pragma once

#include <functional>
#include <span>
#include <vector>

#include "weylcurv/multi_index.hpp"
#include "weylcurv/rational.hpp"

namespace weylcurv {

/// Element of Λᵖ ⊗ Λ^q on an n-dimensional inner-product space with a fixed
/// orthonormal frame: a bilinear form on multivectors, antisymmetric in each
/// slot separately. Coefficients are stored densely over strictly increasing
/// multi-index pairs; a bidegree with p > n or q > n has an empty table and
/// is the zero form of that (annihilated) degree.
///
/// Values are immutable in practice: every operation returns a new form and
/// never mutates its arguments, so shared inputs are safe across threads.
class DoubleForm {
 public:
  DoubleForm(int n, int p, int q);

  static DoubleForm scalar(int n, Rational value);
  /// The metric as a (1,1) identity table.
  static DoubleForm metric(int n);
  /// gᵏ, the k-fold product of the metric with itself (g⁰ = 1).
  static DoubleForm metric_power(int n, int k);

  int dim() const { return n_; }
  int deg_p() const { return p_; }
  int deg_q() const { return q_; }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::span<const Rational> raw() const { return coeffs_; }

  const Rational& coeff(MultiIndex i, MultiIndex j) const;
  void set_coeff(MultiIndex i, MultiIndex j, Rational value);
  void add_coeff(MultiIndex i, MultiIndex j, const Rational& value);

  /// Multilinear evaluation on frame vectors, antisymmetric in each slot.
  /// Repeated indices within a slot yield zero.
  Rational eval_basis(std::span<const int> xs, std::span<const int> ys) const;

  bool is_zero() const;
  Rational max_abs_coeff() const;

  void for_each_nonzero(
      const std::function<void(Mask, Mask, const Rational&)>& fn) const;

  DoubleForm& operator+=(const DoubleForm& other);
  DoubleForm& operator-=(const DoubleForm& other);
  DoubleForm& operator*=(const Rational& scale);

  friend DoubleForm operator+(DoubleForm a, const DoubleForm& b) { return a += b; }
  friend DoubleForm operator-(DoubleForm a, const DoubleForm& b) { return a -= b; }
  friend DoubleForm operator*(DoubleForm a, const Rational& s) { return a *= s; }
  friend DoubleForm operator*(const Rational& s, DoubleForm a) { return a *= s; }
  DoubleForm operator-() const;

  friend bool operator==(const DoubleForm& a, const DoubleForm& b);

 private:
  std::size_t index(Mask i, Mask j) const;

  int n_, p_, q_;
  std::size_t rows_, cols_;
  std::vector<Rational> coeffs_;
};

/// Graded ring product of double forms: basis labels merge with interleaving
/// signs when disjoint in both slots and annihilate otherwise, extended
/// bilinearly; no factorial normalization. Degrees exceeding the dimension
/// give the zero form.
DoubleForm product(const DoubleForm& a, const DoubleForm& b);

/// Contraction: trace over one argument of each slot against the frame.
DoubleForm contract(const DoubleForm& a);
DoubleForm contract_times(DoubleForm a, int times);

/// Multiplication by the metric, g·a.
DoubleForm metric_mult(const DoubleForm& a);

/// Slot-wise Hodge star; satisfies ** = (−1)^{(p+q)(n−p−q)} Id.
DoubleForm hodge_star(const DoubleForm& a);

/// Orthonormal-basis inner product: the coefficient-wise sum over strictly
/// increasing key pairs. Equals *(a·*b); that identity is a test, not the
/// definition.
Rational inner_product(const DoubleForm& a, const DoubleForm& b);
Rational norm_sq(const DoubleForm& a);

/// Membership test for the symmetric ring: coeff(I,J) = coeff(J,I), p = q.
bool is_slot_symmetric(const DoubleForm& a);

/// Trace of a (1,1) form.
Rational trace(const DoubleForm& a);

/// Max over frame 4-tuples of |a(x,y;z,w)+a(y,z;x,w)+a(z,x;y,w)|.
/// Zero exactly when the (2,2) form satisfies the first Bianchi identity.
Rational first_bianchi_defect(const DoubleForm& a);

}  // namespace weylcurv
