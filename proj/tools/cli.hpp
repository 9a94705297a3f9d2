#pragma once

// Command dispatch for the `tricover` tool. Kept in a header so the test
// suites can drive it in-process.
//
// Exit codes: 0 success, 1 usage error, 2 reference-table diff nonempty,
// 3 data error (parity, overflow, malformed input file).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tricover/report.hpp"

namespace tricover::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kTableDiff = 2, kDataError = 3 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline Integer parse_integer_flag(const std::string& text, std::string_view flag) {
  try {
    return Integer::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + std::string(flag) + " expects an integer, got '" + text + "'");
  } catch (const OverflowError&) {
    throw UsageError("--" + std::string(flag) + " is out of range: " + text);
  }
}

inline NearlySplitData parse_data(const std::string& d_text, const std::string& c_text) {
  const Integer d = parse_integer_flag(d_text, "d");
  std::vector<Integer> cs;
  std::string::size_type start = 0;
  while (true) {
    const auto comma = c_text.find(',', start);
    cs.push_back(parse_integer_flag(c_text.substr(start, comma - start), "c"));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (cs.size() != 3) throw UsageError("--c expects three comma-separated degrees C1,C2,C3");
  for (Integer c : cs) {
    if (c < 0) throw UsageError("--c degrees must be nonnegative");
  }
  return {d, cs[0], cs[1], cs[2]};
}

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohomology, invariants and classification of special triple planes", "tricover"};
  app.require_subcommand(1);

  std::string d_text = "0";
  std::string c_text;
  std::string pluri_text = std::to_string(kDefaultPluriMax);

  auto* cohomology = app.add_subcommand("cohomology", "h^i of Sym^k E (x) O(m)");
  std::string sym_text = "1";
  std::string twist_text = "0";
  cohomology->add_option("--d", d_text, "degree of L")->required();
  cohomology->add_option("--c", c_text, "curve degrees C1,C2,C3")->required();
  cohomology->add_option("--sym", sym_text, "symmetric power k >= 0");
  cohomology->add_option("--twist", twist_text, "twist m");

  auto* invariants = app.add_subcommand("invariants", "invariants of the triple plane");
  invariants->add_option("--d", d_text, "degree of L")->required();
  invariants->add_option("--c", c_text, "curve degrees C1,C2,C3")->required();
  invariants->add_option("--pluri-max", pluri_text, "largest plurigenus to compute");

  auto* admissible = app.add_subcommand("admissible", "admissibility verdict on P^2");
  bool no_generic = false;
  admissible->add_option("--d", d_text, "degree of L")->required();
  admissible->add_option("--c", c_text, "curve degrees C1,C2,C3")->required();
  admissible->add_flag("--no-generic", no_generic, "do not assume C3 smooth along C2 n C3");

  auto* classify_cmd = app.add_subcommand("classify", "enumerate admissible data and bucket it");
  std::string d_min_text = "0";
  std::string d_max_text = "3";
  std::string c_max_text = "8";
  std::string split_max_text;
  std::string bucket_text = "all";
  std::string format_text = "markdown";
  classify_cmd->add_option("--d-min", d_min_text, "smallest d");
  classify_cmd->add_option("--d-max", d_max_text, "largest d");
  classify_cmd->add_option("--c-max", c_max_text, "largest curve degree");
  classify_cmd->add_option("--split-max", split_max_text, "largest split degree a1 (defaults to --c-max)");
  classify_cmd->add_option("--pluri-max", pluri_text, "plurigenus cutoff for kappa evidence");
  classify_cmd->add_option("--bucket", bucket_text, "all|notgeneral|nonminimal");
  classify_cmd->add_option("--format", format_text, "markdown|md|csv|json");

  auto* table = app.add_subcommand("table", "compare against a reference classification table");
  std::string table_id;
  table->add_option("id", table_id, "table1|notgeneral|nonminimal")->required();

  auto* general = app.add_subcommand("general", "invariants over a general base surface");
  std::string input_path;
  general->add_option("--input", input_path, "JSON file with chi_structure, basis, pairing")->required();

  auto* slope_cmd = app.add_subcommand("slope", "K^2/chi along a twist or curve ray");
  std::string mode_text;
  std::string m_text = "0";
  slope_cmd->add_option("--mode", mode_text, "twist|curves")->required();
  slope_cmd->add_option("--m", m_text, "step m >= 0");
  slope_cmd->add_option("--d", d_text, "degree of L")->required();
  slope_cmd->add_option("--c", c_text, "curve degrees C1,C2,C3")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*cohomology) {
      const NearlySplitData data = parse_data(d_text, c_text);
      const Integer k = parse_integer_flag(sym_text, "sym");
      if (k < 0 || k > 1000) throw UsageError("--sym must lie in [0, 1000]");
      const SheafCohomology c = sym_cohomology(data, k.to_int64(), parse_integer_flag(twist_text, "twist"));
      out << to_json(c).dump() << '\n';
      return kOk;
    }
    if (*invariants) {
      const NearlySplitData data = parse_data(d_text, c_text);
      const Integer pm = parse_integer_flag(pluri_text, "pluri-max");
      if (pm < 1 || pm > 200) throw UsageError("--pluri-max must lie in [1, 200]");
      const CoverInvariants inv = plane_invariants(data, pm.to_int64());
      if (inv.formal) err << "warning: " << data.to_string() << " is not admissible; values are formal\n";
      nlohmann::json j = to_json(inv);
      j["data"] = to_json(data);
      j["admissibility"] = to_json(plane_status(data));
      out << j.dump() << '\n';
      return kOk;
    }
    if (*admissible) {
      const NearlySplitData data = parse_data(d_text, c_text);
      const AdmissibilityStatus s = plane_status(data, !no_generic);
      out << to_string(s.level) << '\n';
      if (s.smoothness_note) out << "condition: " << *s.smoothness_note << '\n';
      return kOk;
    }
    if (*classify_cmd) {
      EnumerationBounds bounds;
      bounds.d_min = parse_integer_flag(d_min_text, "d-min");
      bounds.d_max = parse_integer_flag(d_max_text, "d-max");
      bounds.c_max = parse_integer_flag(c_max_text, "c-max");
      bounds.split_a_max = split_max_text.empty() ? bounds.c_max : parse_integer_flag(split_max_text, "split-max");
      const Integer pm = parse_integer_flag(pluri_text, "pluri-max");
      if (pm < 3 || pm > 200) throw UsageError("--pluri-max must lie in [3, 200]");
      bounds.pluri_max = pm.to_int64();
      if (bounds.d_min > bounds.d_max) throw UsageError("--d-min must not exceed --d-max");
      if (bounds.c_max < 0) throw UsageError("--c-max must be nonnegative");
      const auto format = parse_output_format(format_text);
      if (!format) throw UsageError("unknown --format '" + format_text + "'");

      const auto records = enumerate(bounds);
      std::vector<ClassRecord> chosen;
      if (bucket_text == "all") {
        chosen = records;
      } else if (bucket_text == "notgeneral") {
        chosen = select(records, {Bucket::NotGeneralType});
      } else if (bucket_text == "nonminimal") {
        chosen = select(records, {Bucket::GeneralTypeNonMinimal});
      } else {
        throw UsageError("unknown --bucket '" + bucket_text + "'");
      }
      out << render_records(chosen, *format);
      return kOk;
    }
    if (*table) {
      const auto id = parse_table_id(table_id);
      if (!id) throw UsageError("unknown table '" + table_id + "'");
      const TableDiff diff = reference_table(*id);
      for (const auto& line : diff.differences) out << "DIFF " << line << '\n';
      out << table_id << ": " << diff.matched << " rows matched, " << diff.differences.size() << " differences\n";
      return diff.empty() ? kOk : kTableDiff;
    }
    if (*general) {
      std::ifstream in(input_path);
      if (!in) throw UsageError("cannot open '" + input_path + "'");
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("malformed JSON: ") + e.what());
      }
      out << to_json(general_invariants(general_surface_from_json(j))).dump() << '\n';
      return kOk;
    }
    if (*slope_cmd) {
      SlopeMode mode;
      if (mode_text == "twist") {
        mode = SlopeMode::twist;
      } else if (mode_text == "curves") {
        mode = SlopeMode::curves;
      } else {
        throw UsageError("--mode must be twist or curves");
      }
      const NearlySplitData data = parse_data(d_text, c_text);
      const Integer m = parse_integer_flag(m_text, "m");
      if (m < 0) throw UsageError("--m must be nonnegative");
      const NearlySplitData shifted = shifted_data(data, mode, m);
      nlohmann::json j{{"mode", mode_text},
                       {"m", to_json(m)},
                       {"K2", to_json(plane_K2(shifted))},
                       {"chi", to_json(plane_chi(shifted))}};
      if (const auto s = slope(data, mode, m)) {
        j["slope"] = s->to_string();
      } else {
        j["slope"] = nullptr;
        err << "note: chi = 0, slope undefined\n";
      }
      out << j.dump() << '\n';
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  } catch (const OverflowError& e) {
    err << "data error: " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace tricover::cli
