#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace weylcurv {

/// Axis subsets are bitmasks over [0, n). The library is sized for desk-scale
/// dimensions; products of two factors stay within this bound.
inline constexpr int kMaxDim = 16;

using Mask = std::uint32_t;

std::uint64_t binomial(int n, int k);

/// Basis label for one slot of a double form: a strictly increasing tuple of
/// axis indices, stored as a bitmask.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(Mask bits) : bits_(bits) {}

  /// Validates: strictly increasing, entries in [0, n).
  static MultiIndex from_indices(std::span<const int> indices, int n);

  Mask bits() const { return bits_; }
  int degree() const { return std::popcount(bits_); }
  bool contains(int axis) const { return (bits_ >> axis) & 1u; }
  MultiIndex complement(int n) const {
    return MultiIndex(static_cast<Mask>(((Mask{1} << n) - 1u) & ~bits_));
  }
  std::vector<int> indices() const;

  friend bool operator==(MultiIndex a, MultiIndex b) = default;

 private:
  Mask bits_ = 0;
};

/// Number of cross-block inversions when [sorted a, sorted b] is merge-sorted.
int merge_inversions(Mask a, Mask b);

/// Parity of the interleaving permutation merging two disjoint index sets;
/// 0 when the sets overlap (the wedge annihilates).
int merge_sign(Mask a, Mask b);

/// Sign incurred moving e_j from the front into sorted position within m∪{j}.
int insertion_sign(int axis, Mask m);

/// Colex rank of a subset among all subsets of the same cardinality.
std::uint64_t subset_rank(Mask m);

/// All degree-p subsets of [0, n), ordered by colex rank. Cached.
const std::vector<Mask>& subsets_of_degree(int n, int p);

}  // namespace weylcurv
