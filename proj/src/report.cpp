#include "reflecta/report.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "reflecta/numeric.hpp"

namespace reflecta {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string family_letter(Family f) { return f == Family::type_b ? "B" : "D"; }

// RFC-4180 quoting for fields that may contain commas (labels do).
std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  out += "\"";
  return out;
}

std::string int_or_blank(const Int& v) { return v < 0 ? std::string() : v.str(); }

// Degenerate-case notes attached to a verification report.
std::vector<std::string> report_notes(const TheoremReport& r) {
  std::vector<std::string> notes;
  if (r.n2_label_coincidence) {
    if (r.family == Family::type_b)
      notes.push_back(
          "n = 2: beta_1 = gamma_1 = ([1],[1]); the coincident label is counted once");
    else
      notes.push_back(
          "n = 2: the group is abelian, the derived algebra is zero and the closure is the "
          "2-dimensional span of the reflection class sums");
  }
  if (r.budget_exceeded) notes.push_back("budget exceeded; partial report");
  return notes;
}

ordered_json matrix_json(const RatMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(rational_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json matrix_json(const ApproxMat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) row.push_back(approx_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class Mat>
ordered_json matrix_list_json(const std::vector<Mat>& mats) {
  ordered_json out = ordered_json::array();
  for (const auto& m : mats) out.push_back(matrix_json(m));
  return out;
}

std::string membership_name(BPClass c) {
  switch (c) {
    case BPClass::Improper: return "improper";
    case BPClass::ArmAndLeg: return "arm-and-leg";
    case BPClass::E: return "E";
    case BPClass::F: return "F";
  }
  return "?";
}

std::string sim_class_b(const Bipartition& b) {
  Bipartition partner = dual_partner(b);
  const Bipartition& least = bipartition_lex_less(partner, b) ? partner : b;
  return bipartition_to_string(least);
}

std::string sim_class_d_pair(const Bipartition& nf) {
  Bipartition partner = unordered_normal_form(conjugate_parts(nf));
  const Bipartition& least = bipartition_lex_less(partner, nf) ? partner : nf;
  return unordered_label_to_string(least);
}

std::string pm_row_label(const Partition& lam) {
  return "{" + partition_to_string(lam) + ",±}";
}

}  // namespace

std::string format_name(ReportFormat f) {
  switch (f) {
    case ReportFormat::json: return "json";
    case ReportFormat::csv: return "csv";
    case ReportFormat::text: return "text";
  }
  return "?";
}

std::string approx_to_string(const ApproxScalar& x) {
  return x.str(40, std::ios_base::scientific);
}

std::string render_theorem_report(const TheoremReport& r, ReportFormat f) {
  std::vector<std::string> notes = report_notes(r);
  if (f == ReportFormat::json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["family"] = family_letter(r.family);
    j["n"] = r.n;
    j["scope"] = r.scope == VerifyScope::regular ? "regular" : "blocks";
    j["pass"] = r.pass;
    j["budget_exceeded"] = r.budget_exceeded;
    if (r.scope == VerifyScope::regular) {
      j["closure_dim"] = r.closure_dim.str();
      j["predicted_derived"] = r.predicted_derived.str();
      j["predicted_center"] = r.predicted_center.str();
      j["predicted_total"] = r.predicted_total.str();
    } else {
      ordered_json s = ordered_json::array();
      for (const auto& v : r.summands) {
        ordered_json e;
        e["label"] = v.label;
        e["predicted"] = v.predicted;
        e["computed"] = v.computed;
        e["predicted_type"] = v.predicted_type;
        e["predicted_dim"] = v.predicted_dim.str();
        e["computed_dim"] = int_or_blank(v.computed_dim);
        e["pass"] = v.pass;
        s.push_back(std::move(e));
      }
      j["summands"] = std::move(s);
    }
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2) + "\n";
  }
  if (f == ReportFormat::csv) {
    std::string out;
    if (r.scope == VerifyScope::regular) {
      out += "family,n,scope,closure_dim,predicted_derived,predicted_center,predicted_total,verdict\n";
      out += family_letter(r.family) + "," + std::to_string(r.n) + ",regular," +
             r.closure_dim.str() + "," + r.predicted_derived.str() + "," +
             r.predicted_center.str() + "," + r.predicted_total.str() + "," +
             (r.pass ? "pass" : "fail") + "\n";
    } else {
      out += "label,predicted_type,predicted_dim,computed_dim,verdict\n";
      for (const auto& v : r.summands)
        out += csv_quote(v.label) + "," + v.predicted_type + "," + v.predicted_dim.str() + "," +
               int_or_blank(v.computed_dim) + "," + (v.pass ? "pass" : "fail") + "\n";
    }
    return out;
  }
  std::ostringstream out;
  out << "verify family " << family_letter(r.family) << " n " << r.n << " scope "
      << (r.scope == VerifyScope::regular ? "regular" : "blocks") << "\n";
  if (r.scope == VerifyScope::regular) {
    if (r.budget_exceeded)
      out << "closure not computed; predicted " << r.predicted_total << " (derived "
          << r.predicted_derived << " + center " << r.predicted_center << ")\n";
    else
      out << "closure dim " << r.closure_dim << " = predicted " << r.predicted_total
          << " (derived " << r.predicted_derived << " + center " << r.predicted_center << ")\n";
  } else {
    for (const auto& v : r.summands)
      out << (v.pass ? "  ok   " : "  FAIL ") << v.label << ": predicted " << v.predicted
          << " | computed " << v.computed << "\n";
  }
  for (const auto& n : notes) out << "note: " << n << "\n";
  out << (r.pass ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string render_rep_export(const RepMatrixSet& rep) {
  ordered_json j;
  j["schema_version"] = 1;
  j["command"] = "irrep";
  j["label"] = rep.label;
  j["family"] = family_letter(rep.family);
  j["mode"] = rep.exact() ? "exact" : "approx";
  if (!rep.exact()) j["precision_bits"] = 256;
  j["n"] = rep.n;
  j["dim"] = rep.dim;
  if (rep.dsign != 0) j["dsign"] = rep.dsign;
  j["shape"] = bipartition_to_string(rep.shape);
  // Basis order: for entry k (1-based) the box [side, row, col],
  // 0-based, side 0 = first tableau.
  ordered_json basis = ordered_json::array();
  for (const auto& bt : rep.basis) {
    ordered_json seq = ordered_json::array();
    for (const auto& b : bt.pos)
      seq.push_back(ordered_json::array({int(b.side), int(b.row), int(b.col)}));
    basis.push_back(std::move(seq));
  }
  j["basis"] = std::move(basis);
  ordered_json gens;
  if (rep.exact()) {
    gens["s"] = matrix_list_json(rep.s);
    if (rep.family == Family::type_b) gens["t"] = matrix_list_json(rep.t);
    else gens["u"] = matrix_list_json(rep.u);
  } else {
    gens["s"] = matrix_list_json(rep.as);
    if (rep.family == Family::type_b) gens["t"] = matrix_list_json(rep.at);
    else gens["u"] = matrix_list_json(rep.au);
  }
  j["generators"] = std::move(gens);
  return j.dump() + "\n";
}

std::vector<TableRow> label_table(int n, Family family) {
  std::vector<TableRow> rows;
  if (family == Family::type_b) {
    for (const auto& bp : bipartitions(n, true)) {
      TableRow row;
      row.label = bipartition_to_string(bp);
      row.membership = membership_name(classify_bipartition(bp).cls);
      row.dim = dim_formula(bp);
      row.sim_class = sim_class_b(bp);
      PredictedBlock p = predicted_block_b(bp);
      row.predicted_type = p.algebra_dim == 0 ? "zero" : algebra_family_name(p.type);
      row.predicted_dim = p.algebra_dim;
      row.predicted = predicted_block_to_string(p);
      rows.push_back(std::move(row));
    }
    return rows;
  }
  for (const auto& l : d_irrep_labels(n)) {
    if (l.sign < 0) continue;  // merged into the sign > 0 row
    TableRow row;
    PredictedBlock p = predicted_block_d(l, n);
    if (l.sign == 0) {
      Bipartition nf = unordered_normal_form({l.lambda, l.mu});
      row.label = unordered_label_to_string(nf);
      row.membership = membership_name(classify_unordered(nf).cls);
      row.sim_class = sim_class_d_pair(nf);
    } else {
      row.label = pm_row_label(l.lambda);
      row.copies = 2;
      Bipartition nf{l.lambda, l.lambda};
      row.membership = membership_name(classify_unordered(nf).cls);
      Partition conj = conjugate(l.lambda);
      const Partition& least = partition_display_less(conj, l.lambda) ? conj : l.lambda;
      row.sim_class = pm_row_label(least);
    }
    row.dim = d_label_dim(l, n);
    row.predicted_type = p.algebra_dim == 0 ? "zero" : algebra_family_name(p.type);
    row.predicted_dim = p.algebra_dim;
    row.predicted = predicted_block_to_string(p);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string render_table(const std::vector<TableRow>& rows, int n, Family family,
                         ReportFormat f) {
  if (f == ReportFormat::json) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "tables";
    j["family"] = family_letter(family);
    j["n"] = n;
    ordered_json out = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json e;
      e["label"] = r.label;
      e["membership"] = r.membership;
      e["copies"] = r.copies;
      e["dim"] = r.dim.str();
      e["sim_class"] = r.sim_class;
      e["predicted_type"] = r.predicted_type;
      e["predicted_dim"] = r.predicted_dim.str();
      e["predicted"] = r.predicted;
      out.push_back(std::move(e));
    }
    j["rows"] = std::move(out);
    return j.dump(2) + "\n";
  }
  if (f == ReportFormat::csv) {
    std::string out = "label,membership,copies,dim,sim_class,predicted_type,predicted_dim,predicted\n";
    for (const auto& r : rows)
      out += csv_quote(r.label) + "," + r.membership + "," + std::to_string(r.copies) + "," +
             r.dim.str() + "," + csv_quote(r.sim_class) + "," + r.predicted_type + "," +
             r.predicted_dim.str() + "," + csv_quote(r.predicted) + "\n";
    return out;
  }
  std::ostringstream out;
  out << "tables family " << family_letter(family) << " n " << n << " (" << rows.size()
      << " rows)\n";
  for (const auto& r : rows) {
    out << "  " << r.label << (r.copies == 2 ? " x2" : "") << "  dim " << r.dim << "  "
        << r.membership << "  ~ " << r.sim_class << "  -> " << r.predicted << "\n";
  }
  return out.str();
}

}  // namespace reflecta
