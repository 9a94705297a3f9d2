#pragma once

// Cohomology of line bundles and split bundles on the projective plane.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "tricover/integer.hpp"

namespace tricover {

/// O(n) on P^2.
struct PlaneLineBundle {
  Integer degree;
};

/// Dimension of the degree-n piece of k[x,y,z]; zero for negative n.
inline Integer line_h0(Integer n) {
  if (n < 0) return 0;
  return (n + 1) * (n + 2) / 2;
}

/// h^i(P^2, O(n)). h^1 always vanishes, h^2 is dual to h^0(O(-n-3)).
inline Integer line_h(Integer n, int i) {
  switch (i) {
    case 0:
      return line_h0(n);
    case 1:
      return 0;
    case 2:
      return line_h0(-n - 3);
    default:
      throw std::invalid_argument("cohomological degree must be 0, 1 or 2");
  }
}

/// Riemann-Roch on P^2: (n+1)(n+2)/2 for every n.
inline Integer line_chi(Integer n) { return (n + 1) * (n + 2) / 2; }

/// Direct sum of line bundles O(d_1) + ... + O(d_r), degrees kept in
/// weakly decreasing order. The empty list is the zero bundle.
class SplitBundle {
public:
  SplitBundle() = default;
  explicit SplitBundle(std::vector<Integer> degrees) : degrees_(std::move(degrees)) {
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>{});
  }
  SplitBundle(std::initializer_list<Integer> degrees) : SplitBundle(std::vector<Integer>(degrees)) {}

  static SplitBundle zero() { return {}; }
  static SplitBundle trivial() { return SplitBundle{Integer{0}}; }

  std::size_t rank() const { return degrees_.size(); }
  const std::vector<Integer>& degrees() const { return degrees_; }

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

private:
  std::vector<Integer> degrees_;
};

namespace detail {

inline void sym_degrees(const std::vector<Integer>& degs, std::size_t index, long remaining, Integer partial,
                        std::vector<Integer>& out) {
  if (index + 1 == degs.size()) {
    out.push_back(partial + degs[index] * remaining);
    return;
  }
  for (long a = remaining; a >= 0; --a) {
    sym_degrees(degs, index + 1, remaining - a, partial + degs[index] * a, out);
  }
}

}  // namespace detail

/// k-th symmetric power: degrees sum(a_i d_i) over all exponent vectors with
/// sum(a_i) = k. Sym^0 is O for every bundle, including the zero bundle.
inline SplitBundle split_sym(const SplitBundle& bundle, long k) {
  if (k < 0) throw std::invalid_argument("symmetric power index must be nonnegative");
  if (k == 0) return SplitBundle::trivial();
  if (bundle.rank() == 0) return SplitBundle::zero();
  std::vector<Integer> out;
  detail::sym_degrees(bundle.degrees(), 0, k, Integer{0}, out);
  return SplitBundle(std::move(out));
}

/// Same as split_sym, extended by Sym^k = 0 for negative k.
inline SplitBundle split_sym_or_zero(const SplitBundle& bundle, long k) {
  return k < 0 ? SplitBundle::zero() : split_sym(bundle, k);
}

inline SplitBundle split_twist(const SplitBundle& bundle, Integer m) {
  std::vector<Integer> out;
  out.reserve(bundle.rank());
  for (Integer d : bundle.degrees()) out.push_back(d + m);
  return SplitBundle(std::move(out));
}

inline SplitBundle split_dual(const SplitBundle& bundle) {
  std::vector<Integer> out;
  out.reserve(bundle.rank());
  for (Integer d : bundle.degrees()) out.push_back(-d);
  return SplitBundle(std::move(out));
}

inline Integer split_det_degree(const SplitBundle& bundle) {
  Integer sum = 0;
  for (Integer d : bundle.degrees()) sum += d;
  return sum;
}

inline Integer split_h(const SplitBundle& bundle, int i) {
  Integer sum = 0;
  for (Integer d : bundle.degrees()) sum += line_h(d, i);
  return sum;
}

inline Integer split_chi(const SplitBundle& bundle) {
  Integer sum = 0;
  for (Integer d : bundle.degrees()) sum += line_chi(d);
  return sum;
}

}  // namespace tricover
