#pragma once

// Nearly split rank-2 bundles on P^2.
//
// Building data (d; c1 >= c2 >= c3 >= 0) describes E through the sequence
//
//   0 -> O(d) -> O(d+c1) + O(d+c2) + O(d+c3) -> E -> 0,
//
// the middle term being the split bundle E~ ("tilde bundle"). Taking
// symmetric powers gives
//
//   0 -> O(d) (x) Sym^{k-1} E~ -> Sym^k E~ -> Sym^k E -> 0,
//
// and because split bundles on P^2 have no h^1, H^0 of the quotient is the
// difference of the two split h^0's. That is the only exactness fact the
// engine relies on; h^2 goes through E^v = E (x) det(E)^{-1} and Serre
// duality instead of through the dualized sequence.

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "tricover/coh_core.hpp"

namespace tricover {

class NearlySplitData {
public:
  NearlySplitData() = default;

  /// Curve degrees may be given in any order; they are stored descending.
  NearlySplitData(Integer d, Integer c1, Integer c2, Integer c3) : d_(d), c_{c1, c2, c3} {
    std::sort(c_.begin(), c_.end(), std::greater<>{});
    if (c_[2] < 0) throw DataError("curve degrees must be nonnegative");
  }

  /// Split bundle O(a1) + O(a2), presented as (0; a1, a2, 0).
  static NearlySplitData split(Integer a1, Integer a2) { return {0, a1, a2, 0}; }

  Integer d() const { return d_; }
  const std::array<Integer, 3>& c() const { return c_; }
  Integer c1() const { return c_[0]; }
  Integer c2() const { return c_[1]; }
  Integer c3() const { return c_[2]; }
  bool is_split() const { return c_[2] == 0; }

  Integer c_sum() const { return c_[0] + c_[1] + c_[2]; }
  Integer c_square_sum() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2]; }
  Integer c_pair_sum() const { return c_[0] * c_[1] + c_[0] * c_[2] + c_[1] * c_[2]; }

  std::string to_string() const {
    return "(" + d_.to_string() + ",(" + c_[0].to_string() + "," + c_[1].to_string() + "," + c_[2].to_string() +
           "))";
  }

  friend bool operator==(const NearlySplitData&, const NearlySplitData&) = default;
  friend auto operator<=>(const NearlySplitData& a, const NearlySplitData& b) {
    if (auto cmp = a.d_ <=> b.d_; cmp != 0) return cmp;
    return a.c_ <=> b.c_;
  }

private:
  Integer d_ = 0;
  std::array<Integer, 3> c_{0, 0, 0};
};

struct SheafCohomology {
  Integer h0 = 0;
  Integer h1 = 0;
  Integer h2 = 0;
  Integer chi = 0;

  friend bool operator==(const SheafCohomology&, const SheafCohomology&) = default;
};

inline SplitBundle tilde_bundle(const NearlySplitData& data) {
  return SplitBundle{data.d() + data.c1(), data.d() + data.c2(), data.d() + data.c3()};
}

struct ChernClasses {
  Integer c1;
  Integer c2;
  friend bool operator==(const ChernClasses&, const ChernClasses&) = default;
};

inline ChernClasses chern(const NearlySplitData& data) {
  const Integer d = data.d();
  return {2 * d + data.c_sum(), d * d + d * data.c_sum() + data.c_pair_sum()};
}

inline Integer det_degree(const NearlySplitData& data) { return 2 * data.d() + data.c_sum(); }

namespace detail {

// h^0 and chi of Sym^k E(m), straight from the symmetric-power sequence.
inline Integer sym_h0(const NearlySplitData& data, long k, Integer m) {
  if (k < 0) return 0;
  const SplitBundle tilde = tilde_bundle(data);
  return split_h(split_twist(split_sym(tilde, k), m), 0) -
         split_h(split_twist(split_sym_or_zero(tilde, k - 1), m + data.d()), 0);
}

inline Integer sym_chi(const NearlySplitData& data, long k, Integer m) {
  if (k < 0) return 0;
  const SplitBundle tilde = tilde_bundle(data);
  return split_chi(split_twist(split_sym(tilde, k), m)) -
         split_chi(split_twist(split_sym_or_zero(tilde, k - 1), m + data.d()));
}

}  // namespace detail

/// Exact cohomology of Sym^k E (x) O(m).
inline SheafCohomology sym_cohomology(const NearlySplitData& data, long k, Integer m) {
  if (k < 0) throw std::invalid_argument("symmetric power index must be nonnegative");
  SheafCohomology out;
  out.h0 = detail::sym_h0(data, k, m);
  out.chi = detail::sym_chi(data, k, m);
  // (Sym^k E(m))^v (x) O(-3) = Sym^k E (x) O(-m - 3 - k e).
  out.h2 = detail::sym_h0(data, k, -m - 3 - Integer(k) * det_degree(data));
  out.h1 = out.h0 + out.h2 - out.chi;
  return out;
}

/// h^0(I_Z^k(m)) for Z the complete intersection of curves of degrees b and c,
/// from the free resolution of the ideal power.
inline Integer ideal_power_h0(Integer b, Integer c, long k, Integer m) {
  if (b < 1 || c < 1 || k < 1) throw std::invalid_argument("ideal_power_h0 needs b, c, k >= 1");
  Integer total = 0;
  for (long i = 0; i <= k; ++i) total += line_h0(m - Integer(k - i) * b - Integer(i) * c);
  for (long i = 0; i < k; ++i) total -= line_h0(m - Integer(k - i) * b - Integer(i + 1) * c);
  return total;
}

/// chi(I_Z^k(m)) from the same resolution.
inline Integer ideal_power_chi(Integer b, Integer c, long k, Integer m) {
  if (b < 1 || c < 1 || k < 1) throw std::invalid_argument("ideal_power_chi needs b, c, k >= 1");
  Integer total = 0;
  for (long i = 0; i <= k; ++i) total += line_chi(m - Integer(k - i) * b - Integer(i) * c);
  for (long i = 0; i < k; ++i) total -= line_chi(m - Integer(k - i) * b - Integer(i + 1) * c);
  return total;
}

/// chi(Sym^k E(m)) for k in {2, 3}, computed through the powers of the Serre
/// sequence
///
///   0 -> O(d+c1) (x) Sym^{k-1} E -> Sym^k E -> I_Z^k (x) O(k(d+c2+c3)) -> 0
///
/// with Z = C2 n C3, recursing down to k = 1 where
///   0 -> O(d+c1) -> E -> I_Z (x) O(d+c2+c3) -> 0.
/// Independent of sym_cohomology; both must agree.
inline Integer serre_path_chi(const NearlySplitData& data, Integer m, long k) {
  if (data.c3() < 1) throw std::invalid_argument("serre_path_chi needs c3 >= 1; use the split route");
  if (k < 1 || k > 3) throw std::invalid_argument("serre_path_chi is defined for k in {1, 2, 3}");
  const Integer first = data.d() + data.c1();
  const Integer ideal_twist = Integer(k) * (data.d() + data.c2() + data.c3()) + m;
  const Integer quotient = ideal_power_chi(data.c2(), data.c3(), k, ideal_twist);
  if (k == 1) return line_chi(m + first) + quotient;
  return serre_path_chi(data, m + first, k - 1) + quotient;
}

}  // namespace tricover
