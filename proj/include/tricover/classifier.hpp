#pragma once

// Exhaustive enumeration of special triple planes within bounds, sorted
// into the classification buckets, and comparison against reference
// classification tables.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tricover/invariants.hpp"

namespace tricover {

enum class Bucket {
  NotGeneralType,
  GeneralTypeNonMinimal,
  MinimalGeneralTypeSmallPg,
  MinimalGeneralType,
};

inline std::string_view to_string(Bucket b) {
  switch (b) {
    case Bucket::NotGeneralType:
      return "NotGeneralType";
    case Bucket::GeneralTypeNonMinimal:
      return "GeneralTypeNonMinimal";
    case Bucket::MinimalGeneralTypeSmallPg:
      return "MinimalGeneralTypeSmallPg";
    case Bucket::MinimalGeneralType:
      return "MinimalGeneralType";
  }
  return "?";
}

inline constexpr long kSmallPgBound = 7;

struct ClassRecord {
  NearlySplitData data;
  AdmissibilityStatus status;
  CoverInvariants inv;
  MinimalityResult minimality;
  Bucket bucket = Bucket::NotGeneralType;
};

/// "gg", "gg (split)" or the check mark for gci-only data.
inline std::string admissibility_label(const NearlySplitData& data, const AdmissibilityStatus& status) {
  switch (status.level) {
    case AdmissibilityLevel::TriviallyAdmissible:
      return data.is_split() ? "gg (split)" : "gg";
    case AdmissibilityLevel::GciAdmissible:
      return "✓";
    case AdmissibilityLevel::GciAdmissibleIfSmooth:
      return "✓ (if C3 smooth)";
    case AdmissibilityLevel::NotAdmissible:
      return "-";
  }
  return "?";
}

struct EnumerationBounds {
  Integer d_min = 0;
  Integer d_max = 3;
  Integer c_max = 8;
  Integer split_a_max = 8;
  long pluri_max = kDefaultPluriMax;
};

inline Bucket assign_bucket(const NearlySplitData& data, const CoverInvariants& inv, const MinimalityResult& mt) {
  if (inv.kappa_estimate != KappaEstimate::two_certified) return Bucket::NotGeneralType;
  const bool minimal = mt.minimal || positivity_forces_minimal_general_type(data);
  if (!minimal) return Bucket::GeneralTypeNonMinimal;
  return inv.pg <= kSmallPgBound ? Bucket::MinimalGeneralTypeSmallPg : Bucket::MinimalGeneralType;
}

inline ClassRecord classify(const NearlySplitData& data, const AdmissibilityStatus& status, long pluri_max) {
  ClassRecord rec{data, status, plane_invariants(data, pluri_max), minimality_test(data), Bucket::NotGeneralType};
  rec.bucket = assign_bucket(data, rec.inv, rec.minimality);
  return rec;
}

/// Admissible data (generic curves) with d in [d_min, d_max] and
/// c_max >= c1 >= c2 >= c3 >= 1, plus split bundles O(a1) + O(a2) with
/// a1 <= min(c_max, split_a_max) presented once as (0; a1, a2, 0). Sorted
/// by (d, c).
inline std::vector<ClassRecord> enumerate(const EnumerationBounds& bounds) {
  if (bounds.d_min > bounds.d_max) throw std::invalid_argument("enumeration bounds need d_min <= d_max");
  if (bounds.c_max < 0) throw std::invalid_argument("enumeration bounds need c_max >= 0");
  std::vector<ClassRecord> out;
  const auto consider = [&](const NearlySplitData& data) {
    const AdmissibilityStatus status = plane_status(data, /*generic=*/true);
    if (status.admissible()) out.push_back(classify(data, status, bounds.pluri_max));
  };
  for (Integer d = bounds.d_min; d <= bounds.d_max; d += 1) {
    if (d == 0) {
      const Integer a_max = std::min(bounds.c_max, bounds.split_a_max);
      for (Integer a1 = 1; a1 <= a_max; a1 += 1) {
        for (Integer a2 = 1; a2 <= a1; a2 += 1) consider(NearlySplitData::split(a1, a2));
      }
    }
    for (Integer c1 = 1; c1 <= bounds.c_max; c1 += 1) {
      for (Integer c2 = 1; c2 <= c1; c2 += 1) {
        for (Integer c3 = 1; c3 <= c2; c3 += 1) consider(NearlySplitData(d, c1, c2, c3));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.data < b.data; });
  return out;
}

inline std::vector<ClassRecord> select(const std::vector<ClassRecord>& records, std::initializer_list<Bucket> buckets) {
  std::vector<ClassRecord> out;
  for (const auto& r : records) {
    if (std::find(buckets.begin(), buckets.end(), r.bucket) != buckets.end()) out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference tables

enum class ReferenceTable { table1, not_general_type, nonminimal_or_small_pg };

inline std::optional<ReferenceTable> parse_table_id(std::string_view id) {
  if (id == "table1") return ReferenceTable::table1;
  if (id == "notgeneral" || id == "not_general_type") return ReferenceTable::not_general_type;
  if (id == "nonminimal" || id == "nonminimal_or_small_pg") return ReferenceTable::nonminimal_or_small_pg;
  return std::nullopt;
}

/// Kodaira dimension as listed: -1 stands for -infinity.
struct ExpectedRow {
  int kappa;
  int pg;
  int q;
  int K2;
  int d;
  int c1;
  int c2;
  int c3;
  std::string_view admissibility;  // empty when the table has no such column
  std::optional<bool> minimal;     // set only where the table has the column

  NearlySplitData data() const { return {d, c1, c2, c3}; }
};

inline constexpr std::string_view kCheck = "✓";

inline const std::vector<ExpectedRow>& table1_rows() {
  static const std::vector<ExpectedRow> rows{
      {-1, 0, 0, 8, 0, 1, 1, 0, {}, std::nullopt},  {-1, 0, 0, 3, 0, 2, 1, 0, {}, std::nullopt},
      {-1, 0, 0, -1, 0, 2, 2, 0, {}, std::nullopt}, {-1, 0, 1, 0, 0, 1, 1, 1, {}, std::nullopt},
      {-1, 0, 1, -9, 0, 2, 2, 2, {}, std::nullopt}, {-1, 0, 0, -4, 1, 1, 1, 1, {}, std::nullopt},
      {0, 1, 0, -1, 0, 3, 2, 0, {}, std::nullopt},  {0, 1, 0, -3, 1, 2, 1, 1, {}, std::nullopt},
      {1, 2, 0, 0, 0, 3, 3, 0, {}, std::nullopt},   {1, 2, 0, -1, 1, 2, 2, 1, {}, std::nullopt},
      {1, 3, 1, 0, 0, 3, 3, 3, {}, std::nullopt},   {2, 4, 0, 5, 1, 3, 2, 1, {}, std::nullopt},
      {2, 7, 0, 15, 1, 4, 2, 1, {}, std::nullopt},
  };
  return rows;
}

inline const std::vector<ExpectedRow>& not_general_type_rows() {
  static const std::vector<ExpectedRow> rows{
      {-1, 0, 0, 8, 0, 1, 1, 0, "gg (split)", std::nullopt}, {-1, 0, 0, 3, 0, 2, 1, 0, "gg (split)", std::nullopt},
      {-1, 0, 0, -1, 0, 2, 2, 0, "gg (split)", std::nullopt}, {-1, 0, 1, 0, 0, 1, 1, 1, "gg", std::nullopt},
      {-1, 0, 1, -9, 0, 2, 2, 2, "gg", std::nullopt},        {-1, 0, 0, -4, 1, 1, 1, 1, "gg", std::nullopt},
      {0, 1, 0, -1, 0, 3, 2, 0, "gg (split)", std::nullopt},  {0, 1, 0, -3, 1, 2, 1, 1, "gg", std::nullopt},
      {1, 2, 0, 0, 0, 3, 3, 0, "gg (split)", std::nullopt},   {1, 2, 0, -1, 1, 2, 2, 1, kCheck, std::nullopt},
      {1, 3, 1, 0, 0, 3, 3, 3, "gg", std::nullopt},
  };
  return rows;
}

inline const std::vector<ExpectedRow>& nonminimal_or_small_pg_rows() {
  static const std::vector<ExpectedRow> rows{
      {2, 3, 0, 3, 0, 4, 2, 0, "gg (split)", true},
      {2, 3, 0, 2, 1, 2, 2, 2, "gg", true},
      {2, 3, 0, 2, 2, 1, 1, 1, "gg", true},
      {2, 4, 0, 5, 0, 4, 3, 0, "gg (split)", true},
      {2, 4, 0, 5, 1, 3, 2, 1, kCheck, false},
      {2, 5, 0, 9, 1, 3, 2, 2, "gg", true},
      {2, 5, 0, 8, 2, 2, 1, 1, "gg", true},
      // O(4) + O(4): T is a (4,3) hypersurface in P^2 x P^1 with K_T of
      // bidegree (1,1), so K_T^2 = 3 + 8 = 11. A printed 9 here is a typo.
      {2, 6, 0, 11, 0, 4, 4, 0, "gg (split)", true},
      {2, 7, 0, 14, 0, 5, 3, 0, "gg (split)", true},
      {2, 7, 0, 15, 1, 4, 2, 1, kCheck, false},
      {2, 7, 0, 17, 1, 3, 3, 2, kCheck, true},
      {2, 7, 0, 15, 2, 2, 2, 1, "gg", true},
  };
  return rows;
}

inline const std::vector<ExpectedRow>& expected_rows(ReferenceTable id) {
  switch (id) {
    case ReferenceTable::table1:
      return table1_rows();
    case ReferenceTable::not_general_type:
      return not_general_type_rows();
    case ReferenceTable::nonminimal_or_small_pg:
      return nonminimal_or_small_pg_rows();
  }
  return table1_rows();
}

inline std::vector<Bucket> table_buckets(ReferenceTable id) {
  switch (id) {
    case ReferenceTable::table1:
      return {Bucket::NotGeneralType, Bucket::GeneralTypeNonMinimal};
    case ReferenceTable::not_general_type:
      return {Bucket::NotGeneralType};
    case ReferenceTable::nonminimal_or_small_pg:
      return {Bucket::GeneralTypeNonMinimal, Bucket::MinimalGeneralTypeSmallPg};
  }
  return {};
}

/// Canned bounds large enough to contain every table row.
inline EnumerationBounds canned_bounds() { return {0, 3, 8, 8, kDefaultPluriMax}; }

inline std::optional<KappaEstimate> expected_estimate(int kappa) {
  switch (kappa) {
    case -1:
      return KappaEstimate::minus_infinity_evidence;
    case 0:
      return KappaEstimate::zero_evidence;
    case 1:
      return KappaEstimate::one_evidence;
    case 2:
      return KappaEstimate::two_certified;
    default:
      return std::nullopt;
  }
}

struct TableDiff {
  std::size_t matched = 0;
  /// Entries "consistent-evidence": kappa < 2 rows whose evidence level agrees.
  std::size_t consistent_evidence = 0;
  std::vector<std::string> differences;

  bool empty() const { return differences.empty(); }
};

inline TableDiff compare_table(ReferenceTable id, const std::vector<ClassRecord>& records) {
  const auto buckets = table_buckets(id);
  std::vector<const ClassRecord*> selected;
  for (const auto& r : records) {
    if (std::find(buckets.begin(), buckets.end(), r.bucket) != buckets.end()) selected.push_back(&r);
  }

  TableDiff diff;
  std::vector<bool> used(selected.size(), false);
  for (const auto& row : expected_rows(id)) {
    const NearlySplitData data = row.data();
    const auto it = std::find_if(selected.begin(), selected.end(), [&](const ClassRecord* r) { return r->data == data; });
    if (it == selected.end()) {
      diff.differences.push_back("missing row " + data.to_string());
      continue;
    }
    used[static_cast<std::size_t>(it - selected.begin())] = true;
    const ClassRecord& rec = **it;
    std::vector<std::string> field_errors;
    const auto check = [&](std::string_view field, Integer got, int want) {
      if (got != want) {
        field_errors.push_back(std::string(field) + " expected " + std::to_string(want) + " got " + got.to_string());
      }
    };
    check("pg", rec.inv.pg, row.pg);
    check("q", rec.inv.q, row.q);
    check("K2", rec.inv.K2, row.K2);
    if (!row.admissibility.empty()) {
      const std::string label = admissibility_label(rec.data, rec.status);
      if (label != row.admissibility) {
        field_errors.push_back("admissibility expected " + std::string(row.admissibility) + " got " + label);
      }
    }
    if (row.minimal && *row.minimal != rec.minimality.minimal) {
      field_errors.push_back(std::string("minimal expected ") + (*row.minimal ? "yes" : "no"));
    }
    const auto want_kappa = expected_estimate(row.kappa);
    if (!want_kappa || rec.inv.kappa_estimate != *want_kappa) {
      field_errors.push_back("kappa expected " + std::to_string(row.kappa) + " got " +
                             std::string(to_string(rec.inv.kappa_estimate)));
    } else if (row.kappa < 2) {
      ++diff.consistent_evidence;
    }
    if (field_errors.empty()) {
      ++diff.matched;
    } else {
      for (auto& e : field_errors) diff.differences.push_back(data.to_string() + ": " + e);
    }
  }
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (!used[i]) diff.differences.push_back("unexpected row " + selected[i]->data.to_string());
  }
  return diff;
}

inline TableDiff reference_table(ReferenceTable id) { return compare_table(id, enumerate(canned_bounds())); }

}  // namespace tricover
