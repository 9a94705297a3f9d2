#pragma once

// Invariants of the triple cover T -> P^2 attached to building data, plus
// the same formulas over an arbitrary base surface given by intersection
// numbers.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/admissibility.hpp"

namespace tricover {

/// What the computed plurigenera say about the Kodaira dimension. Only
/// `two_certified` is a proof; the evidence levels hold up to the cutoff.
enum class KappaEstimate {
  minus_infinity_evidence,
  zero_evidence,
  one_evidence,
  two_certified,
  unknown,
};

inline std::string_view to_string(KappaEstimate k) {
  switch (k) {
    case KappaEstimate::minus_infinity_evidence:
      return "minus_infinity_evidence";
    case KappaEstimate::zero_evidence:
      return "zero_evidence";
    case KappaEstimate::one_evidence:
      return "one_evidence";
    case KappaEstimate::two_certified:
      return "two_certified";
    case KappaEstimate::unknown:
      return "unknown";
  }
  return "unknown";
}

/// Short column form: -inf, 0, 1, 2, ?
inline std::string_view kappa_symbol(KappaEstimate k) {
  switch (k) {
    case KappaEstimate::minus_infinity_evidence:
      return "-inf";
    case KappaEstimate::zero_evidence:
      return "0";
    case KappaEstimate::one_evidence:
      return "1";
    case KappaEstimate::two_certified:
      return "2";
    case KappaEstimate::unknown:
      return "?";
  }
  return "?";
}

inline constexpr long kDefaultPluriMax = 12;

struct Plurigenus {
  long m = 0;
  Integer value = 0;
  /// False when `value` is only a lower bound.
  bool exact = false;

  friend bool operator==(const Plurigenus&, const Plurigenus&) = default;
};

struct CoverInvariants {
  Integer K2 = 0;
  Integer chi = 0;
  Integer pg = 0;
  Integer q = 0;
  Integer chi2K = 0;
  std::vector<Plurigenus> plurigenera;
  KappaEstimate kappa_estimate = KappaEstimate::unknown;
  /// Evaluated on inadmissible data; no cover exists.
  bool formal = false;
};

// ---------------------------------------------------------------------------
// Closed forms on P^2

inline Integer plane_K2(const NearlySplitData& data) {
  const Integer d = data.d();
  const Integer s = data.c_sum();
  return 27 - 12 * (2 * d + s) + (5 * d * d + 5 * d * s + 2 * data.c_square_sum() + data.c_pair_sum());
}

inline Integer plane_chi(const NearlySplitData& data) {
  const Integer d = data.d();
  // sum c_i^2 - 3 c_i = sum c_i (c_i - 3) is always even.
  const Integer half = (data.c_square_sum() - 3 * data.c_sum()) / 2;
  return 3 + d * d - 3 * d + d * data.c_sum() + half;
}

/// chi(2K_T) from its own closed form (not as chi + K^2).
inline Integer plane_chi2K(const NearlySplitData& data) {
  const Integer d = data.d();
  const Integer s = data.c_sum();
  const Rational value = Rational(3 * (1 + 9)) + Rational(9 * (-3 * d)) + Rational(6 * d * d) +
                         Rational(6 * d * s) + Rational(9 * (-3 * s), 2) + Rational(5 * data.c_square_sum(), 2) +
                         Rational(data.c_pair_sum());
  return value.to_integer();
}

/// p_g = sum_i h^0(O(d + c_i - 3)) - h^0(O(d - 3)), binomials truncated at
/// negative degree.
inline Integer closed_form_pg(const NearlySplitData& data) {
  Integer pg = -line_h0(data.d() - 3);
  for (Integer ci : data.c()) pg += line_h0(data.d() + ci - 3);
  return pg;
}

inline Integer closed_form_q(const NearlySplitData& data) { return 1 + closed_form_pg(data) - plane_chi(data); }

// ---------------------------------------------------------------------------
// Plurigenera, minimality, Kodaira dimension

/// P_m >= h^0(Sym^m E(-3m)) - h^0(Sym^{m-3} E(e - 3m)), e = deg det E, with
/// equality when m <= 2 or h^1(Sym^{m-3} E(e - 3m)) = 0.
inline Plurigenus plurigenus(const NearlySplitData& data, long m) {
  if (m < 1) throw std::invalid_argument("plurigenus needs m >= 1");
  const Integer m3 = Integer(3) * Integer(m);
  Plurigenus out{m, sym_cohomology(data, m, -m3).h0, true};
  if (m >= 3) {
    const SheafCohomology correction = sym_cohomology(data, m - 3, det_degree(data) - m3);
    out.value -= correction.h0;
    out.exact = correction.h1 == 0;
  }
  if (out.value < 0) out.value = 0;
  return out;
}

struct MinimalityResult {
  bool general_type = false;
  bool minimal = false;
  Integer h1_2K = 0;

  friend bool operator==(const MinimalityResult&, const MinimalityResult&) = default;
};

/// T is minimal of general type iff K^2 > 0, P_2 > 0 and h^1(Sym^2 E(-6)) = 0.
inline MinimalityResult minimality_test(const NearlySplitData& data) {
  const SheafCohomology twice_canonical = sym_cohomology(data, 2, -6);
  MinimalityResult out;
  out.general_type = plane_K2(data) > 0 && twice_canonical.h0 > 0;
  out.h1_2K = twice_canonical.h1;
  out.minimal = out.general_type && out.h1_2K == 0;
  return out;
}

/// Sufficient positivity for a minimal surface of general type: c1 >= 1 and
/// d + c3 >= 4, or split with larger summand of degree >= 4.
inline bool positivity_forces_minimal_general_type(const NearlySplitData& data) {
  if (data.c1() >= 1 && data.d() + data.c3() >= 4) return true;
  return data.is_split() && data.d() + data.c1() >= 4;
}

namespace detail {

// Growth class of the exact plurigenera. See KappaEstimate.
inline KappaEstimate classify_growth(const std::vector<Plurigenus>& profile) {
  std::vector<Plurigenus> exact;
  for (const auto& p : profile) {
    if (p.exact) exact.push_back(p);
  }
  if (exact.empty()) return KappaEstimate::unknown;

  bool all_zero = true;
  bool all_binary = true;
  bool has_one = false;
  for (const auto& p : exact) {
    all_zero = all_zero && p.value == 0;
    all_binary = all_binary && (p.value == 0 || p.value == 1);
    has_one = has_one || p.value == 1;
  }
  if (all_zero) return KappaEstimate::minus_infinity_evidence;
  if (all_binary && has_one) return KappaEstimate::zero_evidence;

  if (exact.size() >= 2) {
    const Rational slope = Rational(exact[1].value - exact[0].value, Integer(exact[1].m - exact[0].m));
    bool linear = slope > Rational{};
    for (std::size_t i = 2; linear && i < exact.size(); ++i) {
      linear = Rational(exact[i].value - exact[i - 1].value, Integer(exact[i].m - exact[i - 1].m)) == slope;
    }
    if (linear) return KappaEstimate::one_evidence;
  }
  return KappaEstimate::unknown;
}

}  // namespace detail

struct KodairaProfile {
  std::vector<Plurigenus> profile;
  KappaEstimate estimate = KappaEstimate::unknown;
};

/// Plurigenera P_1..P_M and the Kodaira estimate they support. General type
/// is certified via K^2 > 0 and P_2 > 0, or via the positivity criterion.
inline KodairaProfile kodaira_profile(const NearlySplitData& data, long max_m = kDefaultPluriMax) {
  if (max_m < 3) throw std::invalid_argument("kodaira_profile needs a cutoff of at least 3");
  KodairaProfile out;
  out.profile.reserve(static_cast<std::size_t>(max_m));
  for (long m = 1; m <= max_m; ++m) out.profile.push_back(plurigenus(data, m));
  if (minimality_test(data).general_type || positivity_forces_minimal_general_type(data)) {
    out.estimate = KappaEstimate::two_certified;
  } else {
    out.estimate = detail::classify_growth(out.profile);
  }
  return out;
}

/// All invariants of the triple plane. Inadmissible data is evaluated anyway
/// and flagged `formal`.
inline CoverInvariants plane_invariants(const NearlySplitData& data, long pluri_max = kDefaultPluriMax) {
  CoverInvariants inv;
  inv.formal = !plane_status(data).admissible();
  inv.K2 = plane_K2(data);
  inv.chi = plane_chi(data);
  inv.chi2K = plane_chi2K(data);

  const SheafCohomology canonical = sym_cohomology(data, 1, -3);
  inv.pg = canonical.h0;
  inv.q = canonical.h1;

  // chi(O_T) = chi(O_S) + chi(E^v) = 1 + chi(E(-3)) holds unconditionally.
  if (inv.chi != 1 + canonical.chi) throw std::logic_error("chi closed form disagrees with " + data.to_string());
  if (inv.pg != closed_form_pg(data)) throw std::logic_error("p_g closed form disagrees with " + data.to_string());
  if (!inv.formal && inv.q != closed_form_q(data)) {
    throw std::logic_error("q closed form disagrees with " + data.to_string());
  }

  const KodairaProfile kp = kodaira_profile(data, std::max(pluri_max, 3L));
  inv.kappa_estimate = kp.estimate;
  for (const auto& p : kp.profile) {
    if (p.m <= pluri_max) inv.plurigenera.push_back(p);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// General base surface

enum Basis : std::size_t { kK = 0, kL = 1, kC1 = 2, kC2 = 3, kC3 = 4 };

using PairingMatrix = std::array<std::array<Integer, 5>, 5>;

/// chi(O_S) and the intersection pairing on (K_S, L, C1, C2, C3).
class GeneralSurfaceData {
public:
  GeneralSurfaceData(Integer chi_structure, const PairingMatrix& pairing)
      : chi_structure_(chi_structure), pairing_(pairing) {
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (pairing_[i][j] != pairing_[j][i]) throw DataError("pairing matrix is not symmetric");
      }
    }
    for (std::size_t i = kC1; i <= kC3; ++i) {
      if ((pairing_[i][i] + pairing_[kK][i]) % 2 != 0) {
        throw DataError("adjunction parity fails for C" + std::to_string(i - 1) + ": C^2 + K.C is odd");
      }
    }
  }

  /// P^2 with L = O(d), C_i of degree c_i.
  static GeneralSurfaceData projective_plane(const NearlySplitData& data) {
    const std::array<Integer, 5> classes{-3, data.d(), data.c1(), data.c2(), data.c3()};
    return from_multiples(1, classes, 1);
  }

  /// Every class a multiple of one divisor A: pairing (x_i x_j) A^2.
  static GeneralSurfaceData from_multiples(Integer chi_structure, const std::array<Integer, 5>& multiples,
                                           Integer a_squared) {
    PairingMatrix p{};
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 5; ++j) p[i][j] = multiples[i] * multiples[j] * a_squared;
    }
    return {chi_structure, p};
  }

  Integer chi_structure() const { return chi_structure_; }
  const PairingMatrix& pairing() const { return pairing_; }
  Integer dot(std::size_t i, std::size_t j) const { return pairing_[i][j]; }

private:
  Integer chi_structure_;
  PairingMatrix pairing_;
};

struct GeneralInvariants {
  Integer K2T = 0;
  Integer chiT = 0;
  Integer chi2KT = 0;

  friend bool operator==(const GeneralInvariants&, const GeneralInvariants&) = default;
};

inline GeneralInvariants general_invariants(const GeneralSurfaceData& g) {
  const auto dot = [&g](std::size_t i, std::size_t j) { return g.dot(i, j); };
  Integer k_dot_c = 0;
  Integer l_dot_c = 0;
  Integer c_squares = 0;
  Integer c_pairs = 0;
  for (std::size_t i = kC1; i <= kC3; ++i) {
    k_dot_c += dot(kK, i);
    l_dot_c += dot(kL, i);
    c_squares += dot(i, i);
    for (std::size_t j = i + 1; j <= kC3; ++j) c_pairs += dot(i, j);
  }
  const Integer kk = dot(kK, kK);
  const Integer kl = dot(kK, kL);
  const Integer ll = dot(kL, kL);

  GeneralInvariants out;
  out.K2T = 3 * kk + 4 * (2 * kl + k_dot_c) + 5 * ll + 5 * l_dot_c + 2 * c_squares + c_pairs;
  out.chiT = (Rational(3 * g.chi_structure() + ll + kl + l_dot_c) + Rational(c_squares + k_dot_c, 2)).to_integer();
  out.chi2KT = (Rational(3 * (g.chi_structure() + kk) + 9 * kl + 6 * ll + 6 * l_dot_c + c_pairs) +
                Rational(9 * k_dot_c, 2) + Rational(5 * c_squares, 2))
                   .to_integer();
  return out;
}

// ---------------------------------------------------------------------------
// Asymptotics

enum class SlopeMode { twist, curves };

/// Data after m steps: L -> L(m), or every C_i -> C_i + m lines.
inline NearlySplitData shifted_data(const NearlySplitData& data, SlopeMode mode, Integer m) {
  if (mode == SlopeMode::twist) return {data.d() + m, data.c1(), data.c2(), data.c3()};
  return {data.d(), data.c1() + m, data.c2() + m, data.c3() + m};
}

/// K^2 / chi of the shifted data; nullopt when chi = 0.
inline std::optional<Rational> slope(const NearlySplitData& data, SlopeMode mode, Integer m) {
  if (m < 0) throw std::invalid_argument("slope needs m >= 0");
  const NearlySplitData shifted = shifted_data(data, mode, m);
  const Integer chi = plane_chi(shifted);
  if (chi == 0) return std::nullopt;
  return Rational(plane_K2(shifted), chi);
}

}  // namespace tricover
