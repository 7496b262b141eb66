// powclass: verifies power-sum identities over equivalence classes of
// matrices with rows drawn from an S_n-invariant vector set.
//
// Subcommands:
//   verify   - run one identity (theorem 1-4 or baseline eq1-eq4)
//   classes  - print the class table for a relation
//   dist     - class probabilities and optional weight expectation
//
// Exit codes: 0 = PASS, 1 = input/guard error, 2 = verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "powclass/report_io.hpp"
#include "powclass/vspec.hpp"

namespace {

struct CommonOpts {
  std::string format = "json";
  std::string out;
  powclass::Limits limits;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Report format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", opts.out,
                  "Write the report to this file instead of stdout; relative "
                  "paths resolve under $POWCLASS_OUTDIR when set");
  cmd->add_option("--max-space", opts.limits.max_space,
                  "Maximum enumerated |X| = s^m");
  cmd->add_option("--max-orbit", opts.limits.max_orbit,
                  "Maximum explicit orbit size");
  cmd->add_option("--max-canon-dim", opts.limits.max_canon_dim,
                  "Maximum m and n for canonical-form search");
}

void emit(const std::string& text, const CommonOpts& opts) {
  if (opts.out.empty()) {
    std::cout << text;
    return;
  }
  std::string path = opts.out;
  const char* dir = std::getenv("POWCLASS_OUTDIR");
  if (dir && *dir && path.front() != '/')
    path = std::string(dir) + "/" + path;
  std::ofstream file(path);
  if (!file) throw powclass::InputError("cannot write report to " + path);
  file << text;
  std::cerr << "report written to " << path << "\n";
}

int run_verify(const std::string& theorem, const std::string& vspec,
               std::size_t m, unsigned s, unsigned m1, unsigned m2,
               const CommonOpts& opts) {
  using namespace powclass;
  if (theorem == "eq1" || theorem == "eq2" || theorem == "eq3" ||
      theorem == "eq4") {
    BaselineResult result;
    if (theorem == "eq1")
      result = check_eq1(s, static_cast<unsigned>(m));
    else if (theorem == "eq2")
      result = check_eq2(s, static_cast<unsigned>(m));
    else if (theorem == "eq3")
      result = check_eq3(s, m1, m2);
    else
      result = check_eq4(s, m1, m2);
    emit(opts.format == "json" ? render_json(baseline_to_json(result))
                               : baseline_to_csv(result),
         opts);
    return result.ok ? 0 : 2;
  }

  int k = 0;
  if (theorem == "1" || theorem == "2" || theorem == "3" || theorem == "4")
    k = theorem[0] - '0';
  else
    throw InputError("--theorem must be 1, 2, 3, 4, eq1, eq2, eq3 or eq4");
  if (vspec.empty())
    throw InputError("--v is required for theorem " + theorem);
  auto v = parse_vspec(vspec);
  VerificationReport report = verify_theorem(k, v, m, opts.limits);
  emit(opts.format == "json" ? render_json(report_to_json(report))
                             : report_to_csv(report),
       opts);
  std::cerr << "theorem " << theorem << " on " << v->provenance()
            << ", m=" << m << ": " << verdict_name(report.verdict) << "\n";
  return report.verdict == Verdict::Pass ? 0 : 2;
}

int run_classes(const std::string& relation, const std::string& vspec,
                std::size_t m, const std::string& eval_at,
                const CommonOpts& opts) {
  using namespace powclass;
  auto v = parse_vspec(vspec);
  const RelationKind rel = parse_relation(relation);
  VerificationReport report = run_relation(v, m, rel, opts.limits);

  std::optional<MatrixA> member;
  if (!eval_at.empty()) {
    member = parse_matrix_literal(eval_at, v);
    if (member->rows() != m)
      throw InputError("--eval-at matrix has " +
                       std::to_string(member->rows()) + " rows, expected m = " +
                       std::to_string(m));
  }

  if (opts.format == "json") {
    nlohmann::ordered_json doc = report_to_json(report);
    if (member) {
      const ClassKey key = class_key(*member, rel, opts.limits);
      nlohmann::ordered_json eval;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (std::size_t i = 0; i < member->rows(); ++i)
        rows.push_back(member->row(i));
      eval["matrix"] = rows;
      eval["key"] = key.digest();
      for (const ClassRow& row : report.rows)
        if (row.record.key == key)
          eval["class_brute"] = to_decimal(row.record.brute_size);
      eval["formula_at_member"] =
          to_decimal(formula_value_at(*member, rel));
      doc["eval"] = eval;
    }
    emit(render_json(doc), opts);
  } else {
    std::string text = report_to_csv(report);
    if (member) {
      const ClassKey key = class_key(*member, rel, opts.limits);
      text += "eval," + member->to_string() + "," + key.digest() + "," +
              to_decimal(formula_value_at(*member, rel)) + "\n";
    }
    emit(text, opts);
  }
  return 0;
}

int run_dist(const std::string& relation, const std::string& vspec,
             std::size_t m, const std::string& weight,
             const CommonOpts& opts) {
  using namespace powclass;
  auto v = parse_vspec(vspec);
  const RelationKind rel = parse_relation(relation);
  VerificationReport report = run_relation(v, m, rel, opts.limits);
  auto dist = class_distribution(report);
  std::optional<std::pair<std::string, BigRational>> exp_line;
  if (!weight.empty()) {
    WeightSpec w = parse_weight_spec(weight);
    exp_line = {w.text, expectation(report, w, opts.limits)};
  }
  emit(opts.format == "json" ? render_json(dist_to_json(report, dist, exp_line))
                             : dist_to_csv(report, dist, exp_line),
       opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification of power-sum identities over matrix classes"};
  app.require_subcommand(1);

  std::string theorem, vspec, relation = "c", eval_at, weight;
  std::size_t m = 1;
  unsigned s = 1, m1 = 1, m2 = 1;

  CommonOpts verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "Verify one identity and report per-class results");
  verify->add_option("--theorem", theorem,
                     "Identity: 1, 2, 3, 4, eq1, eq2, eq3 or eq4")
      ->required();
  verify->add_option("--v", vspec, "V-spec (see docs), e.g. diag:s=2,n=3");
  verify->add_option("--m", m, "Number of matrix rows (or exponent for eq1/eq2)");
  verify->add_option("--s", s, "Ground size for baseline identities");
  verify->add_option("--m1", m1, "First exponent for eq3/eq4");
  verify->add_option("--m2", m2, "Second exponent for eq3/eq4");
  add_common(verify, verify_opts);

  CommonOpts classes_opts;
  CLI::App* classes =
      app.add_subcommand("classes", "Print the class table for a relation");
  classes->add_option("--relation", relation, "c, r, rc, rsc or rc-meet")
      ->required();
  classes->add_option("--v", vspec, "V-spec")->required();
  classes->add_option("--m", m, "Number of matrix rows")->required();
  classes->add_option("--eval-at", eval_at,
                      "Matrix literal (\"1;2\" or \"0 1;1 0\"): evaluate the "
                      "class formula at this member");
  add_common(classes, classes_opts);

  CommonOpts dist_opts;
  CLI::App* dist = app.add_subcommand(
      "dist", "Class probability distribution and optional expectation");
  dist->add_option("--relation", relation, "c, r, rc, rsc or rc-meet")
      ->required();
  dist->add_option("--v", vspec, "V-spec")->required();
  dist->add_option("--m", m, "Number of matrix rows")->required();
  dist->add_option("--weight", weight,
                   "unit, rank_eq:p=..,r=.. or table:<path>");
  add_common(dist, dist_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed())
      return run_verify(theorem, vspec, m, s, m1, m2, verify_opts);
    if (classes->parsed())
      return run_classes(relation, vspec, m, eval_at, classes_opts);
    return run_dist(relation, vspec, m, weight, dist_opts);
  } catch (const powclass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
