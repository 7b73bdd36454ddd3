#include "weylcurv/double_form.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylcurv {

namespace {

const Rational kZero(0);

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// Sorts a tuple of axis indices, returning the permutation sign and the mask;
// sign 0 when an index repeats.
int sort_sign(std::span<const int> idx, int n, Mask& mask) {
  mask = 0;
  int sign = 1;
  for (int x : idx) {
    if (x < 0 || x >= n) throw std::invalid_argument("frame index out of range");
    const Mask bit = Mask{1} << x;
    if (mask & bit) return 0;
    // moving x past the already-placed larger indices
    if (std::popcount(mask >> (x + 1)) & 1) sign = -sign;
    mask |= bit;
  }
  return sign;
}

}  // namespace

DoubleForm::DoubleForm(int n, int p, int q) : n_(n), p_(p), q_(q) {
  require(n >= 0 && n <= kMaxDim, "dimension out of range");
  require(p >= 0 && q >= 0, "negative bidegree");
  rows_ = static_cast<std::size_t>(binomial(n, p));
  cols_ = static_cast<std::size_t>(binomial(n, q));
  coeffs_.assign(rows_ * cols_, Rational(0));
}

DoubleForm DoubleForm::scalar(int n, Rational value) {
  DoubleForm out(n, 0, 0);
  out.coeffs_[0] = std::move(value);
  return out;
}

DoubleForm DoubleForm::metric(int n) {
  DoubleForm out(n, 1, 1);
  for (int i = 0; i < n; ++i) {
    const MultiIndex m{Mask{1} << i};
    out.set_coeff(m, m, Rational(1));
  }
  return out;
}

DoubleForm DoubleForm::metric_power(int n, int k) {
  if (k == 0) return scalar(n, Rational(1));
  DoubleForm out(n, k, k);
  if (k > n) return out;  // annihilated degree: zero form
  const Rational kfact = rational_factorial(k);
  for (Mask m : subsets_of_degree(n, k)) {
    out.set_coeff(MultiIndex{m}, MultiIndex{m}, kfact);
  }
  return out;
}

std::size_t DoubleForm::index(Mask i, Mask j) const {
  return static_cast<std::size_t>(subset_rank(i)) * cols_ +
         static_cast<std::size_t>(subset_rank(j));
}

const Rational& DoubleForm::coeff(MultiIndex i, MultiIndex j) const {
  if (i.degree() != p_ || j.degree() != q_) {
    throw std::invalid_argument("key degree does not match bidegree");
  }
  if (coeffs_.empty()) return kZero;
  return coeffs_[index(i.bits(), j.bits())];
}

void DoubleForm::set_coeff(MultiIndex i, MultiIndex j, Rational value) {
  require(i.degree() == p_ && j.degree() == q_, "key degree does not match bidegree");
  coeffs_[index(i.bits(), j.bits())] = std::move(value);
}

void DoubleForm::add_coeff(MultiIndex i, MultiIndex j, const Rational& value) {
  require(i.degree() == p_ && j.degree() == q_, "key degree does not match bidegree");
  coeffs_[index(i.bits(), j.bits())] += value;
}

Rational DoubleForm::eval_basis(std::span<const int> xs, std::span<const int> ys) const {
  require(static_cast<int>(xs.size()) == p_ && static_cast<int>(ys.size()) == q_,
          "argument count does not match bidegree");
  Mask mi = 0, mj = 0;
  const int si = sort_sign(xs, n_, mi);
  if (si == 0) return Rational(0);
  const int sj = sort_sign(ys, n_, mj);
  if (sj == 0) return Rational(0);
  Rational out = coeffs_.empty() ? Rational(0) : coeffs_[index(mi, mj)];
  if (si * sj < 0) out = -out;
  return out;
}

bool DoubleForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

Rational DoubleForm::max_abs_coeff() const {
  Rational best(0);
  for (const Rational& c : coeffs_) {
    Rational a = c < 0 ? Rational(-c) : c;
    if (a > best) best = a;
  }
  return best;
}

void DoubleForm::for_each_nonzero(
    const std::function<void(Mask, Mask, const Rational&)>& fn) const {
  const auto& rows = subsets_of_degree(n_, p_);
  const auto& cols = subsets_of_degree(n_, q_);
  std::size_t idx = 0;
  for (const Mask i : rows) {
    for (const Mask j : cols) {
      const Rational& c = coeffs_[idx++];
      if (c != 0) fn(i, j, c);
    }
  }
}

DoubleForm& DoubleForm::operator+=(const DoubleForm& other) {
  require(n_ == other.n_ && p_ == other.p_ && q_ == other.q_,
          "shape mismatch in double form addition");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

DoubleForm& DoubleForm::operator-=(const DoubleForm& other) {
  require(n_ == other.n_ && p_ == other.p_ && q_ == other.q_,
          "shape mismatch in double form subtraction");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

DoubleForm& DoubleForm::operator*=(const Rational& scale) {
  for (Rational& c : coeffs_) c *= scale;
  return *this;
}

DoubleForm DoubleForm::operator-() const {
  DoubleForm out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const DoubleForm& a, const DoubleForm& b) {
  return a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_ && a.coeffs_ == b.coeffs_;
}

DoubleForm product(const DoubleForm& a, const DoubleForm& b) {
  require(a.dim() == b.dim(), "dimension mismatch in product");
  const int n = a.dim();
  DoubleForm out(n, a.deg_p() + b.deg_p(), a.deg_q() + b.deg_q());
  if (out.rows() == 0 || out.cols() == 0) return out;  // annihilated degree
  a.for_each_nonzero([&](Mask ia, Mask ja, const Rational& ca) {
    b.for_each_nonzero([&](Mask ib, Mask jb, const Rational& cb) {
      if ((ia & ib) || (ja & jb)) return;
      const int sign = merge_sign(ia, ib) * merge_sign(ja, jb);
      Rational term = ca * cb;
      if (sign < 0) term = -term;
      out.add_coeff(MultiIndex{ia | ib}, MultiIndex{ja | jb}, term);
    });
  });
  return out;
}

DoubleForm contract(const DoubleForm& a) {
  require(a.deg_p() >= 1 && a.deg_q() >= 1, "contraction needs p, q >= 1");
  const int n = a.dim();
  DoubleForm out(n, a.deg_p() - 1, a.deg_q() - 1);
  a.for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
    Mask common = i & j;
    while (common) {
      const int axis = std::countr_zero(common);
      common &= common - 1;
      const Mask bit = Mask{1} << axis;
      const Mask i0 = i & ~bit, j0 = j & ~bit;
      const int sign = insertion_sign(axis, i0) * insertion_sign(axis, j0);
      Rational term = sign < 0 ? Rational(-c) : c;
      out.add_coeff(MultiIndex{i0}, MultiIndex{j0}, term);
    }
  });
  return out;
}

DoubleForm contract_times(DoubleForm a, int times) {
  for (int i = 0; i < times; ++i) a = contract(a);
  return a;
}

DoubleForm metric_mult(const DoubleForm& a) {
  return product(DoubleForm::metric(a.dim()), a);
}

DoubleForm hodge_star(const DoubleForm& a) {
  const int n = a.dim();
  require(a.deg_p() <= n && a.deg_q() <= n, "star undefined above top degree");
  const Mask full = (Mask{1} << n) - 1u;
  DoubleForm out(n, n - a.deg_p(), n - a.deg_q());
  a.for_each_nonzero([&](Mask i, Mask j, const Rational& c) {
    const Mask ic = full & ~i, jc = full & ~j;
    const int sign = ((merge_inversions(i, ic) + merge_inversions(j, jc)) & 1) ? -1 : 1;
    out.add_coeff(MultiIndex{ic}, MultiIndex{jc}, sign < 0 ? Rational(-c) : c);
  });
  return out;
}

Rational inner_product(const DoubleForm& a, const DoubleForm& b) {
  require(a.dim() == b.dim() && a.deg_p() == b.deg_p() && a.deg_q() == b.deg_q(),
          "shape mismatch in inner product");
  Rational out(0);
  const auto ra = a.raw();
  const auto rb = b.raw();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] != 0 && rb[i] != 0) out += ra[i] * rb[i];
  }
  return out;
}

Rational norm_sq(const DoubleForm& a) { return inner_product(a, a); }

bool is_slot_symmetric(const DoubleForm& a) {
  if (a.deg_p() != a.deg_q()) return false;
  const auto& keys = subsets_of_degree(a.dim(), a.deg_p());
  for (std::size_t r = 0; r < keys.size(); ++r) {
    for (std::size_t c = r + 1; c < keys.size(); ++c) {
      if (a.coeff(MultiIndex{keys[r]}, MultiIndex{keys[c]}) !=
          a.coeff(MultiIndex{keys[c]}, MultiIndex{keys[r]})) {
        return false;
      }
    }
  }
  return true;
}

Rational trace(const DoubleForm& a) {
  require(a.deg_p() == 1 && a.deg_q() == 1, "trace needs bidegree (1,1)");
  Rational out(0);
  for (int i = 0; i < a.dim(); ++i) {
    const MultiIndex m{Mask{1} << i};
    out += a.coeff(m, m);
  }
  return out;
}

Rational first_bianchi_defect(const DoubleForm& a) {
  require(a.deg_p() == 2 && a.deg_q() == 2, "first Bianchi needs bidegree (2,2)");
  const int n = a.dim();
  Rational worst(0);
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      for (int z = y + 1; z < n; ++z) {
        for (int w = 0; w < n; ++w) {
          const int t1[] = {x, y}, t2[] = {y, z}, t3[] = {z, x};
          const int u[] = {z, w}, v[] = {x, w}, s[] = {y, w};
          Rational sum = a.eval_basis(t1, u) + a.eval_basis(t2, v) + a.eval_basis(t3, s);
          if (sum < 0) sum = -sum;
          if (sum > worst) worst = sum;
        }
      }
    }
  }
  return worst;
}

}  // namespace weylcurv
