#include "weylcurv/multi_index.hpp"

#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

namespace weylcurv {

namespace {

constexpr auto make_binomials() {
  std::array<std::array<std::uint64_t, kMaxDim + 1>, kMaxDim + 1> b{};
  for (int n = 0; n <= kMaxDim; ++n) {
    b[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      b[n][k] = b[n - 1][k - 1] + (k <= n - 1 ? b[n - 1][k] : 0);
    }
  }
  return b;
}

constexpr auto kBinom = make_binomials();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n > kMaxDim) throw std::out_of_range("dimension exceeds kMaxDim");
  return kBinom[n][k];
}

MultiIndex MultiIndex::from_indices(std::span<const int> indices, int n) {
  Mask bits = 0;
  int prev = -1;
  for (int i : indices) {
    if (i < 0 || i >= n) throw std::invalid_argument("multi-index entry out of range");
    if (i <= prev) throw std::invalid_argument("multi-index not strictly increasing");
    bits |= Mask{1} << i;
    prev = i;
  }
  return MultiIndex(bits);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(degree());
  for (Mask m = bits_; m;) {
    const int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

int merge_inversions(Mask a, Mask b) {
  int inv = 0;
  for (Mask m = b; m;) {
    const int i = std::countr_zero(m);
    inv += std::popcount(a >> (i + 1));
    m &= m - 1;
  }
  return inv;
}

int merge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  return (merge_inversions(a, b) & 1) ? -1 : 1;
}

int insertion_sign(int axis, Mask m) {
  const Mask below = m & ((Mask{1} << axis) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

std::uint64_t subset_rank(Mask m) {
  std::uint64_t rank = 0;
  int seen = 0;
  while (m) {
    const int i = std::countr_zero(m);
    ++seen;
    rank += binomial(i, seen);
    m &= m - 1;
  }
  return rank;
}

const std::vector<Mask>& subsets_of_degree(int n, int p) {
  if (n < 0 || n > kMaxDim || p < 0) throw std::out_of_range("bad subset request");
  static std::map<std::pair<int, int>, std::vector<Mask>> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto& entry = cache[{n, p}];
  if (entry.empty() && binomial(n, p) > 0) {
    entry.reserve(binomial(n, p));
    if (p == 0) {
      entry.push_back(0);
    } else {
      // Gosper's hack: ascending numeric order coincides with colex rank.
      Mask v = (Mask{1} << p) - 1u;
      const Mask limit = Mask{1} << n;
      while (v < limit) {
        entry.push_back(v);
        const Mask c = v & -v;
        const Mask r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
        if (c == 0) break;
      }
    }
  }
  return entry;
}

}  // namespace weylcurv
