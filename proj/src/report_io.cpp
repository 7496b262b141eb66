#include "powclass/report_io.hpp"

#include <sstream>

namespace powclass {

namespace {

nlohmann::ordered_json matrix_to_json(const MatrixA& a) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  return rows;
}

std::string profile_to_csv(const Multiset<std::uint64_t>& profile) {
  std::string out;
  for (std::uint64_t v : profile.expand()) {
    if (!out.empty()) out += "+";
    out += std::to_string(v);
  }
  return out;
}

nlohmann::ordered_json config_to_json(const ReportConfig& config) {
  nlohmann::ordered_json c;
  c["v"] = config.provenance;
  c["ground"] = {{"labels", config.ground_labels},
                 {"group", config.ground_desc}};
  c["s"] = config.s;
  c["n"] = config.n;
  c["m"] = config.m;
  if (config.theorem) c["theorem"] = *config.theorem;
  c["relation"] = relation_name(config.relation);
  c["representative_policy"] = config.representative_policy;
  c["f_injective"] = config.f_injective;
  if (config.inversion_closed) c["inversion_closed"] = *config.inversion_closed;
  return c;
}

nlohmann::ordered_json class_to_json(const ClassRow& row) {
  nlohmann::ordered_json c;
  c["key"] = row.record.key.digest();
  c["representative"] = matrix_to_json(row.record.representative);
  c["brute"] = to_decimal(row.record.brute_size);
  c["formula"] = to_decimal(row.record.formula_size);
  c["mult_row_f"] = row.record.mult_row_f.expand();
  c["mult_col"] = row.record.mult_col.expand();
  if (row.record.t)
    c["t"] = *row.record.t;
  else
    c["t"] = nullptr;
  c["match"] = row.match;
  return c;
}

}  // namespace

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = "powclass.report.v1";
  doc["config"] = config_to_json(report.config);
  doc["expected"] = to_decimal(report.expected);
  doc["total_brute"] = to_decimal(report.total_brute);
  doc["total_formula"] = to_decimal(report.total_formula);
  doc["verdict"] = verdict_name(report.verdict);
  doc["witnesses"] = report.witnesses;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ClassRow& row : report.rows) classes.push_back(class_to_json(row));
  doc["classes"] = classes;
  return doc;
}

std::string report_to_csv(const VerificationReport& report) {
  std::ostringstream out;
  out << "key,representative,brute,formula,mult_row_f,mult_col,t,match\n";
  for (const ClassRow& row : report.rows) {
    out << row.record.key.digest() << ","
        << row.record.representative.to_string() << ","
        << to_decimal(row.record.brute_size) << ","
        << to_decimal(row.record.formula_size) << ","
        << profile_to_csv(row.record.mult_row_f) << ","
        << profile_to_csv(row.record.mult_col) << ",";
    if (row.record.t) out << *row.record.t;
    out << "," << (row.match ? "true" : "false") << "\n";
  }
  return out.str();
}

nlohmann::ordered_json baseline_to_json(const BaselineResult& result) {
  nlohmann::ordered_json doc;
  doc["schema"] = "powclass.baseline.v1";
  doc["identity"] = result.identity;
  nlohmann::ordered_json params;
  for (const auto& [name, value] : result.params) params[name] = value;
  doc["params"] = params;
  if (result.lhs) doc["lhs"] = to_decimal(*result.lhs);
  if (result.rhs) doc["rhs"] = to_decimal(*result.rhs);
  doc["cases_checked"] = result.cases_checked;
  doc["verdict"] = result.ok ? "PASS" : "FAIL";
  doc["witnesses"] = result.witnesses;
  return doc;
}

std::string baseline_to_csv(const BaselineResult& result) {
  std::ostringstream out;
  out << "identity,params,lhs,rhs,cases_checked,verdict\n";
  out << result.identity << ",";
  for (std::size_t i = 0; i < result.params.size(); ++i)
    out << (i ? " " : "") << result.params[i].first << "="
        << result.params[i].second;
  out << ",";
  if (result.lhs) out << to_decimal(*result.lhs);
  out << ",";
  if (result.rhs) out << to_decimal(*result.rhs);
  out << "," << result.cases_checked << ","
      << (result.ok ? "PASS" : "FAIL") << "\n";
  return out.str();
}

nlohmann::ordered_json dist_to_json(
    const VerificationReport& report,
    const std::vector<std::pair<ClassKey, BigRational>>& dist,
    const std::optional<std::pair<std::string, BigRational>>& expectation) {
  nlohmann::ordered_json doc;
  doc["schema"] = "powclass.dist.v1";
  doc["config"] = config_to_json(report.config);
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  BigRational total = 0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    nlohmann::ordered_json c;
    c["key"] = dist[i].first.digest();
    c["representative"] =
        matrix_to_json(report.rows[i].record.representative);
    c["brute"] = to_decimal(report.rows[i].record.brute_size);
    c["probability"] = to_fraction(dist[i].second);
    total += dist[i].second;
    classes.push_back(c);
  }
  doc["classes"] = classes;
  doc["probability_total"] = to_fraction(total);
  if (expectation) {
    doc["expectation"] = {{"weight", expectation->first},
                          {"value", to_fraction(expectation->second)}};
  }
  return doc;
}

std::string dist_to_csv(
    const VerificationReport& report,
    const std::vector<std::pair<ClassKey, BigRational>>& dist,
    const std::optional<std::pair<std::string, BigRational>>& expectation) {
  std::ostringstream out;
  out << "key,representative,brute,probability\n";
  for (std::size_t i = 0; i < dist.size(); ++i) {
    out << dist[i].first.digest() << ","
        << report.rows[i].record.representative.to_string() << ","
        << to_decimal(report.rows[i].record.brute_size) << ","
        << to_fraction(dist[i].second) << "\n";
  }
  if (expectation)
    out << "expectation,\"" << expectation->first << "\",,"
        << to_fraction(expectation->second) << "\n";
  return out.str();
}

std::string render_json(const nlohmann::ordered_json& doc) {
  return doc.dump(2) + "\n";
}

}  // namespace powclass
