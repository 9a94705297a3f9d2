#pragma once

// Admissibility of building data: does E occur as the Tschirnhausen bundle
// of a smooth connected triple cover?
//
// Levels, strongest first:
//   TriviallyAdmissible    Sym^3 E~ (x) det E^v globally generated
//   GciAdmissible          a smooth cover cut out inside P(E~) exists
//   GciAdmissibleIfSmooth  as above provided C3 is smooth along C2 n C3
//   NotAdmissible
//
// None of these inspect actual curves; the geometric clause of the third
// level is resolved by the caller (generic members) or by c3 = 1.

#include <optional>
#include <string>
#include <string_view>

#include "tricover/nearly_split.hpp"

namespace tricover {

enum class AdmissibilityLevel {
  TriviallyAdmissible,
  GciAdmissible,
  GciAdmissibleIfSmooth,
  NotAdmissible,
};

inline std::string_view to_string(AdmissibilityLevel level) {
  switch (level) {
    case AdmissibilityLevel::TriviallyAdmissible:
      return "TriviallyAdmissible";
    case AdmissibilityLevel::GciAdmissible:
      return "GciAdmissible";
    case AdmissibilityLevel::GciAdmissibleIfSmooth:
      return "GciAdmissibleIfSmooth";
    case AdmissibilityLevel::NotAdmissible:
      return "NotAdmissible";
  }
  return "?";
}

/// Lower rank = stronger level.
constexpr int strength_rank(AdmissibilityLevel level) { return static_cast<int>(level); }

inline constexpr std::string_view kSmoothnessNote = "C3 is smooth at every point of C2 n C3";

struct AdmissibilityStatus {
  AdmissibilityLevel level = AdmissibilityLevel::NotAdmissible;
  /// Set only for GciAdmissibleIfSmooth.
  std::optional<std::string> smoothness_note;
  /// GciAdmissible reached by resolving the smoothness clause (c3 = 1 or generic curves).
  bool promoted = false;

  bool admissible() const { return level != AdmissibilityLevel::NotAdmissible; }

  friend bool operator==(const AdmissibilityStatus&, const AdmissibilityStatus&) = default;
};

namespace detail {

inline AdmissibilityStatus make_status(AdmissibilityLevel level) { return {level, std::nullopt, false}; }

inline AdmissibilityStatus if_smooth(bool resolve) {
  if (resolve) return {AdmissibilityLevel::GciAdmissible, std::nullopt, true};
  return {AdmissibilityLevel::GciAdmissibleIfSmooth, std::string(kSmoothnessNote), false};
}

}  // namespace detail

/// O(a1) + O(a2) on P^2 is admissible iff 0 < a2 <= a1 <= 2 a2.
inline bool split_admissible(Integer a1, Integer a2) {
  if (a1 < a2) std::swap(a1, a2);
  return 0 < a2 && a1 <= 2 * a2;
}

/// Necessary condition for admissible split data: both O(3a1 - a2) and
/// O(3a2 - a1) have sections.
inline bool split_necessary(Integer a1, Integer a2) {
  return line_h0(3 * a1 - a2) != 0 && line_h0(3 * a2 - a1) != 0;
}

/// Status for commensurable data C_i in |c_i A| with |A| base point free on
/// an arbitrary surface. Requires c3 >= 1.
inline AdmissibilityStatus commensurable_status(Integer d, Integer c1, Integer c2, Integer c3) {
  if (c3 < 1) throw std::invalid_argument("commensurable_status needs c3 >= 1; use the split route");
  if (!(c1 >= c2 && c2 >= c3)) throw std::invalid_argument("commensurable_status needs c1 >= c2 >= c3");
  using enum AdmissibilityLevel;
  if (d + c3 >= c1 + c2 - c3) return detail::make_status(TriviallyAdmissible);
  if (d + c3 >= c1) return detail::make_status(GciAdmissible);
  if (c1 > d + c3 && d + c3 >= c2 && d - c1 + 2 * c2 - c3 >= 0) return detail::if_smooth(c3 == 1);
  return detail::make_status(NotAdmissible);
}

/// Status on P^2. With c3 = 0 the bundle is split and the answer is binary.
inline AdmissibilityStatus plane_status(const NearlySplitData& data, bool generic = true) {
  using enum AdmissibilityLevel;
  const Integer d = data.d();
  const Integer c1 = data.c1();
  const Integer c2 = data.c2();
  const Integer c3 = data.c3();
  if (data.is_split()) {
    return detail::make_status(split_admissible(d + c1, d + c2) ? TriviallyAdmissible : NotAdmissible);
  }
  if (d - c1 - c2 + 2 * c3 >= 0) return detail::make_status(TriviallyAdmissible);
  if (d + c3 >= c1) return detail::make_status(GciAdmissible);
  if (c1 > d + c3 && d + c3 >= c2 && d - c1 + 2 * c2 - c3 >= 0) return detail::if_smooth(generic || c3 == 1);
  return detail::make_status(NotAdmissible);
}

/// H^0(E^v) = 0, the condition for a connected cover.
inline bool connectedness(const NearlySplitData& data) {
  return sym_cohomology(data, 1, -det_degree(data)).h0 == 0;
}

/// Necessary condition for an irreducible cover: for every ordering {i,j,k},
/// O(d + 2(c_j + c_k) - c_i) (x) I^3_{C_j n C_k} has a section. Pairs
/// involving a degree-0 curve have empty intersection and reduce to h^0 of
/// the line bundle.
inline bool irreducibility_necessary(const NearlySplitData& data) {
  const auto& c = data.c();
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    const Integer twist = data.d() + 2 * (c[j] + c[k]) - c[i];
    const Integer h0 =
        (c[j] == 0 || c[k] == 0) ? line_h0(twist) : ideal_power_h0(c[j], c[k], 3, twist);
    if (h0 == 0) return false;
  }
  return true;
}

}  // namespace tricover
