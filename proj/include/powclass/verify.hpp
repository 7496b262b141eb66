#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "powclass/relations.hpp"

namespace powclass {

enum class Verdict { Pass, PerClassFail, TotalFail };

std::string verdict_name(Verdict v);

struct ReportConfig {
  std::string provenance;
  std::string ground_desc;
  std::vector<Label> ground_labels;
  std::size_t s = 0, n = 0, m = 0;
  RelationKind relation = RelationKind::C;
  std::optional<int> theorem;
  std::string representative_policy = "lexmin";
  bool f_injective = false;
  std::optional<bool> inversion_closed;  // present when K has an inverse map
};

struct ClassRow {
  ClassRecord record;
  bool match;  // brute_size == formula_size
};

/// Per-relation verification result. The brute totals always equal s^m (the
/// partition identity is unconditional; a mismatch is an internal bug). The
/// verdict reflects only whether the closed-form sizes agree.
struct VerificationReport {
  ReportConfig config;
  std::vector<ClassRow> rows;
  BigCount expected;       // s^m
  BigCount total_brute;    // = expected, always
  BigCount total_formula;  // sum of closed-form class sizes
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witnesses;  // digests of failing classes
  std::shared_ptr<const VSet> vset;
};

// Partition X under the relation, fill closed-form sizes, compare per class
// and in total.
VerificationReport run_relation(const std::shared_ptr<const VSet>& v,
                                std::size_t m, RelationKind rel,
                                const Limits& limits = {});

// Theorem k with its relation: 1 -> c, 2 -> r, 3 -> rc, 4 -> rsc.
// k = 4 requires a group structure and V closed under inversion.
VerificationReport verify_theorem(int k, const std::shared_ptr<const VSet>& v,
                                  std::size_t m, const Limits& limits = {});

// ---- baseline identities -------------------------------------------------

// Expands (x_1+...+x_s)^m by brute force and compares every monomial
// coefficient against the multinomial coefficient. True iff all match.
bool baseline_eq1(unsigned s, unsigned m);

// Sum of binom(m, r_1..r_s) over all weak compositions; equals s^m.
BigCount baseline_eq2(unsigned s, unsigned m);

// Multinomial Vandermonde convolution at a single exponent vector r.
bool baseline_eq3(unsigned m1, unsigned m2,
                  const std::vector<std::uint64_t>& r);

// Full double sum over compositions and k-vectors; equals s^(m1+m2).
BigCount baseline_eq4(unsigned s, unsigned m1, unsigned m2);

/// Reportable baseline outcome for the CLI and the acceptance suite.
struct BaselineResult {
  std::string identity;  // "eq1".."eq4"
  std::vector<std::pair<std::string, std::uint64_t>> params;
  std::optional<BigCount> lhs, rhs;  // absent for the per-case checks
  std::uint64_t cases_checked = 0;
  bool ok = false;
  std::vector<std::string> witnesses;
};

BaselineResult check_eq1(unsigned s, unsigned m);
BaselineResult check_eq2(unsigned s, unsigned m);
// Sweeps every r of length s with sum m1+m2.
BaselineResult check_eq3(unsigned s, unsigned m1, unsigned m2);
BaselineResult check_eq4(unsigned s, unsigned m1, unsigned m2);

}  // namespace powclass
