#pragma once

#include <string>
#include <vector>

#include "reflecta/irreps.hpp"
#include "reflecta/lie_structure.hpp"

namespace reflecta {

enum class ReportFormat { json, csv, text };

std::string format_name(ReportFormat f);

// Fixed-digit scientific form for approximate scalars (rationals use
// rational_to_string from numeric.hpp).
std::string approx_to_string(const ApproxScalar& x);

// All renderers produce deterministic UTF-8 bytes ("\n" newlines,
// trailing newline, JSON keys in insertion order, "schema_version": 1,
// rationals as strings).
std::string render_theorem_report(const TheoremReport& r, ReportFormat f);

// Representation export: label, family, mode, dim, basis as position
// sequences [side, row, col] per entry, generator matrices as fraction
// strings (exact) or decimal strings with a precision tag (approx).
std::string render_rep_export(const RepMatrixSet& rep);

// One row per simple-module label; the two halves of a {lambda,+-}
// pair merge into one row with copies = 2.
struct TableRow {
  std::string label;
  std::string membership;  // improper / arm-and-leg / E / F
  int copies = 1;
  Int dim = 0;             // module dimension (per copy)
  std::string sim_class;   // least label of the ~-class
  std::string predicted_type;  // sl / so / sp / zero
  Int predicted_dim = 0;
  std::string predicted;   // full predicted-block description
};
std::vector<TableRow> label_table(int n, Family family);
std::string render_table(const std::vector<TableRow>& rows, int n, Family family,
                         ReportFormat f);

}  // namespace reflecta
