#pragma once

// Serialization of results: JSON objects, CSV and markdown tables, and the
// JSON input format for general base surfaces.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise. Rationals are always strings ("p" or "p/q").

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tricover/classifier.hpp"

namespace tricover {

enum class OutputFormat { markdown, csv, json };

inline std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "markdown" || name == "md") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  return std::nullopt;
}

inline nlohmann::json to_json(Integer v) {
  if (v.fits_int64()) return v.to_int64();
  return v.to_string();
}

inline nlohmann::json to_json(const SheafCohomology& c) {
  return {{"h0", to_json(c.h0)}, {"h1", to_json(c.h1)}, {"h2", to_json(c.h2)}, {"chi", to_json(c.chi)}};
}

inline nlohmann::json to_json(const NearlySplitData& data) {
  return {{"d", to_json(data.d())}, {"c", {to_json(data.c1()), to_json(data.c2()), to_json(data.c3())}}};
}

inline nlohmann::json to_json(const AdmissibilityStatus& s) {
  nlohmann::json j{{"level", std::string(to_string(s.level))}, {"promoted", s.promoted}};
  if (s.smoothness_note) j["smoothness_note"] = *s.smoothness_note;
  return j;
}

inline nlohmann::json to_json(const CoverInvariants& inv) {
  nlohmann::json pluri = nlohmann::json::array();
  for (const auto& p : inv.plurigenera) {
    pluri.push_back({{"m", p.m}, {"value", to_json(p.value)}, {"exact", p.exact}});
  }
  return {{"K2", to_json(inv.K2)},
          {"chi", to_json(inv.chi)},
          {"pg", to_json(inv.pg)},
          {"q", to_json(inv.q)},
          {"chi2K", to_json(inv.chi2K)},
          {"plurigenera", std::move(pluri)},
          {"kappa_estimate", std::string(to_string(inv.kappa_estimate))},
          {"formal", inv.formal}};
}

inline nlohmann::json to_json(const GeneralInvariants& g) {
  return {{"K2T", to_json(g.K2T)}, {"chiT", to_json(g.chiT)}, {"chi2KT", to_json(g.chi2KT)}};
}

inline nlohmann::json to_json(const ClassRecord& r) {
  nlohmann::json j = to_json(r.data);
  j["admissibility"] = admissibility_label(r.data, r.status);
  j["status"] = to_json(r.status);
  j["bucket"] = std::string(to_string(r.bucket));
  j["kappa"] = std::string(kappa_symbol(r.inv.kappa_estimate));
  j["minimal"] = r.minimality.minimal;
  j["invariants"] = to_json(r.inv);
  return j;
}

/// Fixed column order shared by the CSV and markdown renderings.
inline const std::vector<std::string>& table_columns() {
  static const std::vector<std::string> cols{"kappa", "pg", "q", "K2", "d", "c1", "c2", "c3", "admissibility"};
  return cols;
}

inline std::vector<std::string> table_cells(const ClassRecord& r) {
  return {std::string(kappa_symbol(r.inv.kappa_estimate)),
          r.inv.pg.to_string(),
          r.inv.q.to_string(),
          r.inv.K2.to_string(),
          r.data.d().to_string(),
          r.data.c1().to_string(),
          r.data.c2().to_string(),
          r.data.c3().to_string(),
          admissibility_label(r.data, r.status)};
}

inline std::string render_records(const std::vector<ClassRecord>& records, OutputFormat format) {
  std::ostringstream os;
  const auto& cols = table_columns();
  switch (format) {
    case OutputFormat::csv: {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
      os << '\n';
      for (const auto& r : records) {
        const auto cells = table_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i) {
          // The admissibility label is the only field that can hold a space.
          const bool quote = cells[i].find_first_of(", ") != std::string::npos;
          os << (i ? "," : "") << (quote ? "\"" + cells[i] + "\"" : cells[i]);
        }
        os << '\n';
      }
      break;
    }
    case OutputFormat::markdown: {
      os << '|';
      for (const auto& c : cols) os << ' ' << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
      os << '\n';
      for (const auto& r : records) {
        os << '|';
        for (const auto& cell : table_cells(r)) os << ' ' << cell << " |";
        os << '\n';
      }
      break;
    }
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : records) arr.push_back(to_json(r));
      os << arr.dump(2) << '\n';
      break;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// General-surface input
//
//   {"chi_structure": 2,
//    "basis": ["K", "L", "C1", "C2", "C3"],
//    "pairing": [[...5 ints...], ... 5 rows ...]}

namespace detail {

inline Integer json_integer(const nlohmann::json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer::parse(v.get<std::string>());
    } catch (const std::invalid_argument&) {
    }
  }
  throw DataError(where + " must be an integer");
}

}  // namespace detail

inline GeneralSurfaceData general_surface_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw DataError("general-surface input must be a JSON object");
  if (!j.contains("chi_structure") || !j.contains("pairing")) {
    throw DataError("general-surface input needs \"chi_structure\" and \"pairing\"");
  }
  if (j.contains("basis")) {
    const nlohmann::json expected = {"K", "L", "C1", "C2", "C3"};
    if (j["basis"] != expected) throw DataError("basis must be [\"K\",\"L\",\"C1\",\"C2\",\"C3\"]");
  }
  const auto& rows = j["pairing"];
  if (!rows.is_array() || rows.size() != 5) throw DataError("pairing must be a 5x5 integer matrix");
  PairingMatrix p{};
  for (std::size_t i = 0; i < 5; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 5) throw DataError("pairing must be a 5x5 integer matrix");
    for (std::size_t k = 0; k < 5; ++k) {
      p[i][k] = detail::json_integer(rows[i][k], "pairing[" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return {detail::json_integer(j["chi_structure"], "chi_structure"), p};
}

inline nlohmann::json to_json(const GeneralSurfaceData& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : g.pairing()) {
    nlohmann::json r = nlohmann::json::array();
    for (Integer v : row) r.push_back(to_json(v));
    rows.push_back(std::move(r));
  }
  return {{"chi_structure", to_json(g.chi_structure())},
          {"basis", {"K", "L", "C1", "C2", "C3"}},
          {"pairing", std::move(rows)}};
}

}  // namespace tricover
