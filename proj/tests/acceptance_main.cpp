// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Takes the CLI binary path as argv[1] (used by the determinism criterion).

#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "powclass/report_io.hpp"
#include "powclass/vspec.hpp"
#include "powclass/weights.hpp"

using namespace powclass;

namespace {

int failures = 0;

void report_line(const std::string& id, bool ok, const std::string& text) {
  std::cout << "[" << id << "] " << (ok ? "PASS" : "FAIL") << "  " << text
            << "\n";
  if (!ok) ++failures;
}

struct Config {
  std::string name;
  std::shared_ptr<const VSet> v;
  std::size_t m;
};

// The verification envelope: diag s<=4 n<=3 m<=4 (plain and cyclic q=s),
// weight n<=4 h<=n m<=3, comp q<=3 n<=4 m<=2 (all compositions),
// squares n=2 h in {1,2,5} m<=2 (plain and with the negation group).
std::vector<Config> envelope() {
  std::vector<Config> out;
  auto add = [&](std::shared_ptr<const VSet> v, std::size_t m) {
    out.push_back(Config{v->provenance() + " m=" + std::to_string(m), v, m});
  };
  for (std::size_t s = 1; s <= 4; ++s)
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; m <= 4; ++m) {
        std::vector<Label> labels;
        for (std::size_t i = 0; i < s; ++i) labels.push_back(Label(i));
        add(std::make_shared<const VSet>(
                gen_diagonal(s, n, GroundSet::plain(labels))),
            m);
        add(std::make_shared<const VSet>(
                gen_diagonal(s, n, GroundSet::cyclic(s))),
            m);
      }
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t h = 0; h <= n; ++h)
      for (std::size_t m = 1; m <= 3; ++m)
        add(std::make_shared<const VSet>(gen_constant_weight(n, h)), m);
  for (std::uint64_t q = 1; q <= 3; ++q)
    for (std::uint64_t n = 1; n <= 4; ++n)
      weak_compositions(n, q, [&](const std::vector<std::uint64_t>& h) {
        for (std::size_t m = 1; m <= 2; ++m)
          add(std::make_shared<const VSet>(gen_composition(q, h)), m);
      });
  for (std::uint64_t h : {1, 2, 5})
    for (std::size_t m = 1; m <= 2; ++m) {
      add(std::make_shared<const VSet>(gen_squares(2, h, false)), m);
      add(std::make_shared<const VSet>(gen_squares(2, h, true)), m);
    }
  return out;
}

bool rsc_applicable(const VSet& v) {
  return v.ground().has_inverse() && !check_inversion_closed(v).has_value();
}

std::vector<RelationKind> relations_for(const VSet& v) {
  std::vector<RelationKind> rels{RelationKind::C, RelationKind::R,
                                 RelationKind::RcOrbit};
  if (rsc_applicable(v)) rels.push_back(RelationKind::RscOrbit);
  return rels;
}

// ---- criteria -------------------------------------------------------------

void criterion_1(const std::vector<Config>& configs) {
  std::size_t runs = 0;
  std::string bad;
  for (const Config& c : configs) {
    const BigCount expected = space_size(*c.v, c.m);
    for (RelationKind rel : relations_for(*c.v)) {
      BigCount sum = 0;
      for (const auto& rec : partition_X(c.v, c.m, rel))
        sum += rec.brute_size;
      ++runs;
      if (sum != expected && bad.empty())
        bad = c.name + " " + relation_name(rel) + ": " + sum.str() +
              " != " + expected.str();
    }
  }
  report_line("1", bad.empty(),
              "partition identity: class sizes sum to s^m on " +
                  std::to_string(runs) + " (config, relation) runs" +
                  (bad.empty() ? "" : "; first failure " + bad));
}

void criterion_2(const std::vector<Config>& configs) {
  std::string bad;
  std::size_t runs = 0;
  for (const Config& c : configs) {
    auto report = verify_theorem(1, c.v, c.m);
    ++runs;
    if (report.verdict != Verdict::Pass && bad.empty()) bad = c.name;
  }
  auto power_check = [&](const std::string& spec, std::size_t m,
                         const BigCount& total) {
    auto report = verify_theorem(1, parse_vspec(spec), m);
    if (report.verdict != Verdict::Pass || report.total_formula != total)
      bad = spec + " expected total " + total.str() + ", got " +
            report.total_formula.str();
  };
  power_check("weight:n=4,h=2", 2, BigCount(36));
  power_check("comp:q=3,h=1,1,1", 2, BigCount(36));
  power_check("squares:n=2,h=1", 2, BigCount(16));
  report_line("2", bad.empty(),
              "theorem 1 passes on all " + std::to_string(runs) +
                  " envelope configs and the three power checks (36, 36, 16)" +
                  (bad.empty() ? "" : "; failure at " + bad));
}

void criterion_3(const std::vector<Config>& configs) {
  std::string bad;
  std::size_t runs = 0;
  for (const Config& c : configs) {
    if (c.v->provenance().rfind("diag:", 0) != 0) continue;
    for (int k : {2, 3}) {
      auto report = verify_theorem(k, c.v, c.m);
      ++runs;
      if (report.verdict != Verdict::Pass && bad.empty())
        bad = "theorem " + std::to_string(k) + " on " + c.name;
    }
  }
  report_line("3", bad.empty(),
              "theorems 2 and 3 pass on all " + std::to_string(runs) +
                  " diagonal runs" + (bad.empty() ? "" : "; " + bad));
}

void criterion_4() {
  std::string bad;
  std::size_t runs = 0;
  for (std::uint64_t q : {2, 3, 4, 5})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t m = 1; m <= 4; ++m) {
        auto v = std::make_shared<const VSet>(
            gen_diagonal(q, n, GroundSet::cyclic(q)));
        auto report = verify_theorem(4, v, m);
        ++runs;
        if (report.verdict != Verdict::Pass && bad.empty())
          bad = "q=" + std::to_string(q) + ",n=" + std::to_string(n) +
                ",m=" + std::to_string(m);
      }
  auto report = verify_theorem(4, parse_vspec("diag:s=3,n=1,q=3"), 2);
  std::vector<BigCount> sizes;
  for (const auto& row : report.rows) sizes.push_back(row.record.brute_size);
  if (sizes != std::vector<BigCount>{1, 4, 4})
    bad = "mod-3 partition is not 1,4,4";
  report_line("4", bad.empty(),
              "theorem 4 passes on " + std::to_string(runs) +
                  " cyclic diagonal runs (q in 2..5) with the lex-min policy; "
                  "mod-3 partition is 1,4,4" +
                  (bad.empty() ? "" : "; failure at " + bad));
}

void criterion_5(const std::vector<Config>& configs) {
  std::string bad;
  std::size_t runs = 0;
  Limits lim;
  for (const Config& c : configs) {
    if (space_size(*c.v, c.m) > 10'000) continue;
    std::vector<RelationKind> rels{RelationKind::RcOrbit};
    if (rsc_applicable(*c.v)) rels.push_back(RelationKind::RscOrbit);
    for (RelationKind rel : rels) {
      std::map<std::vector<Label>, std::size_t> by_key, by_orbit;
      std::map<ClassKey, std::size_t> key_ids;
      for_each_matrix(c.v, c.m, lim, [&](const MatrixA& a) {
        auto key = class_key(a, rel, lim);
        auto [pos, inserted] = key_ids.emplace(std::move(key), key_ids.size());
        by_key[a.entries()] = pos->second;
      });
      std::size_t next = 0;
      for_each_matrix(c.v, c.m, lim, [&](const MatrixA& a) {
        if (by_orbit.count(a.entries())) return;
        const std::size_t id = next++;
        for (const MatrixA& b : orbit_bfs(a, rel, lim))
          by_orbit[b.entries()] = id;
      });
      ++runs;
      if (by_key != by_orbit && bad.empty())
        bad = c.name + " " + relation_name(rel);
    }
  }
  report_line("5", bad.empty(),
              "canonical keys and orbit closure induce identical partitions "
              "on " + std::to_string(runs) + " runs with |X| <= 10^4" +
                  (bad.empty() ? "" : "; mismatch at " + bad));
}

void criterion_6a() {
  // Pinned expectation: theorem 3 on weight(2,1), m=2 reports
  // total_formula 6 vs expected 4, a failing witness class, and a non-PASS
  // verdict (CLI exit 2). The engine disagrees; see the printed outcome.
  auto report = verify_theorem(3, parse_vspec("weight:n=2,h=1"), 2);
  const bool ok = report.total_formula == 6 &&
                  report.verdict != Verdict::Pass &&
                  !report.witnesses.empty();
  std::ostringstream got;
  got << "engine computes verdict " << verdict_name(report.verdict)
      << " with total_formula " << report.total_formula.str() << " vs s^m "
      << report.expected.str() << " and " << report.witnesses.size()
      << " witnesses";
  report_line("6a", ok,
              "documented failure: theorem 3 on weight(n=2,h=1), m=2 expected "
              "to report total_formula 6 != 4 with a witness class; " +
                  got.str());
}

void criterion_6b() {
  auto v = parse_vspec("diag:s=3,n=1,q=3");
  MatrixA lexmin = parse_matrix_literal("1;1", v);
  MatrixA other = parse_matrix_literal("1;2", v);
  const bool same_class = key_rsc(lexmin) == key_rsc(other);
  const BigCount brute = orbit_bfs(lexmin, RelationKind::RscOrbit).size();
  const BigCount at_min = formula_value_at(lexmin, RelationKind::RscOrbit);
  const BigCount at_other = formula_value_at(other, RelationKind::RscOrbit);
  const bool ok =
      same_class && brute == 4 && at_min == 4 && at_other == 8;
  report_line("6b", ok,
              "representative sensitivity over mod 3: class size 4, formula "
              "4 at the lex-min member, 8 at member [[1],[2]]");
}

void criterion_7() {
  bool ok = true;
  std::string bad;
  for (unsigned s = 1; s <= 4 && ok; ++s)
    for (unsigned m = 1; m <= 5 && ok; ++m)
      if (!check_eq1(s, m).ok) {
        ok = false;
        bad = "eq1 s=" + std::to_string(s) + " m=" + std::to_string(m);
      }
  for (unsigned s = 1; s <= 5 && ok; ++s)
    for (unsigned m = 1; m <= 6 && ok; ++m)
      if (!check_eq2(s, m).ok) {
        ok = false;
        bad = "eq2 s=" + std::to_string(s) + " m=" + std::to_string(m);
      }
  for (unsigned s = 1; s <= 3 && ok; ++s)
    for (unsigned m1 = 1; m1 <= 4 && ok; ++m1)
      for (unsigned m2 = 1; m2 <= 4 && ok; ++m2)
        if (!check_eq3(s, m1, m2).ok) {
          ok = false;
          bad = "eq3";
        }
  for (unsigned s = 1; s <= 2 && ok; ++s)
    for (unsigned m1 = 1; m1 <= 3 && ok; ++m1)
      for (unsigned m2 = 1; m1 + m2 <= 4 && ok; ++m2)
        if (!check_eq4(s, m1, m2).ok) {
          ok = false;
          bad = "eq4";
        }
  report_line("7", ok,
              "baselines eq1 (s<=4,m<=5), eq2 (s<=5,m<=6), eq3 (s<=3, all r), "
              "eq4 (s<=2) hold exactly" + (ok ? "" : "; failure at " + bad));
}

void criterion_8(const std::vector<Config>& configs) {
  std::string bad;
  std::size_t runs = 0;
  for (const Config& c : configs) {
    for (RelationKind rel : relations_for(*c.v)) {
      auto report = run_relation(c.v, c.m, rel);
      BigRational total = 0;
      for (const auto& [key, p] : class_distribution(report)) total += p;
      ++runs;
      if (total != BigRational(1) && bad.empty())
        bad = c.name + " " + relation_name(rel);
    }
  }
  auto report = run_relation(parse_vspec("diag:s=2,n=2,q=2"), 2,
                             RelationKind::C);
  WeightSpec rank1{WeightSpec::Kind::RankEq, 2, 1, {}, "rank_eq:p=2,r=1"};
  WeightSpec rank0{WeightSpec::Kind::RankEq, 2, 0, {}, "rank_eq:p=2,r=0"};
  const BigRational e1 = expectation(report, rank1);
  const BigRational e0 = expectation(report, rank0);
  // Counts over the four matrices: 3 of rank 1, 1 of rank 0.
  if (e1 != BigRational(3, 4) || e0 != BigRational(1, 4))
    bad = "rank-weight example: got " + to_fraction(e1) + ", " +
          to_fraction(e0);
  report_line("8", bad.empty(),
              "class probabilities sum to 1 on " + std::to_string(runs) +
                  " runs; rank-weight example gives counts 3 (rank 1) and 1 "
                  "(rank 0)" +
                  (bad.empty() ? "" : "; " + bad));
}

void criterion_9(const std::string& binary) {
  auto capture = [&](const std::string& args) {
    const std::string cmd = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (pipe) {
      std::array<char, 4096> buf;
      std::size_t got;
      while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
      const int status = pclose(pipe);
      out += "\nexit=" + std::to_string(WEXITSTATUS(status));
    }
    return out;
  };
  const std::vector<std::string> cmds{
      "verify --theorem 4 --v diag:s=4,n=2,q=4 --m 3",
      "verify --theorem 1 --v squares:n=2,h=5 --m 2 --format csv",
      "classes --relation rc --v weight:n=4,h=2 --m 2",
      "dist --relation rsc --v comp:q=3,h=1,1,1 --m 2 "
      "--weight rank_eq:p=3,r=1",
      "verify --theorem eq3 --s 3 --m1 2 --m2 2 --format csv",
  };
  std::string bad;
  for (const std::string& cmd : cmds) {
    if (capture(cmd) != capture(cmd)) {
      bad = cmd;
      break;
    }
  }
  report_line("9", bad.empty(),
              "CLI reruns are byte-identical on " +
                  std::to_string(cmds.size()) + " commands" +
                  (bad.empty() ? "" : "; differs: " + bad));
}

}  // namespace

int main(int argc, char** argv) {
  const std::string binary = argc > 1 ? argv[1] : "./build/tools/powclass";
  const std::vector<Config> configs = envelope();
  std::cout << "envelope: " << configs.size() << " (V, m) configurations\n";
  criterion_1(configs);
  criterion_2(configs);
  criterion_3(configs);
  criterion_4();
  criterion_5(configs);
  criterion_6a();
  criterion_6b();
  criterion_7();
  criterion_8(configs);
  criterion_9(binary);
  if (failures) {
    std::cout << failures << " criterion(s) FAILED\n";
    return failures;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
