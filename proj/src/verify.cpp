#include "powclass/verify.hpp"

#include <map>
#include <sstream>

namespace powclass {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::PerClassFail: return "PER_CLASS_FAIL";
    case Verdict::TotalFail: return "TOTAL_FAIL";
  }
  return "?";
}

VerificationReport run_relation(const std::shared_ptr<const VSet>& v,
                                std::size_t m, RelationKind rel,
                                const Limits& limits) {
  VerificationReport report;
  report.vset = v;
  report.config.provenance = v->provenance();
  report.config.ground_desc = v->ground().group_desc();
  report.config.ground_labels = v->ground().labels();
  report.config.s = v->size();
  report.config.n = v->n();
  report.config.m = m;
  report.config.relation = rel;
  report.config.f_injective = !check_f_injective(*v).has_value();
  if (v->ground().has_inverse())
    report.config.inversion_closed = !check_inversion_closed(*v).has_value();

  report.expected = space_size(*v, m);
  report.total_brute = 0;
  report.total_formula = 0;
  for (ClassRecord& rec : partition_X(v, m, rel, limits)) {
    const bool match = rec.brute_size == rec.formula_size;
    report.total_brute += rec.brute_size;
    report.total_formula += rec.formula_size;
    if (!match) report.witnesses.push_back(rec.key.digest());
    report.rows.push_back(ClassRow{std::move(rec), match});
  }
  if (report.total_brute != report.expected)
    throw std::logic_error("partition identity violated: brute total " +
                           report.total_brute.str() + " != s^m = " +
                           report.expected.str());
  if (!report.witnesses.empty())
    report.verdict = Verdict::PerClassFail;
  else if (report.total_formula != report.expected)
    report.verdict = Verdict::TotalFail;
  else
    report.verdict = Verdict::Pass;
  return report;
}

VerificationReport verify_theorem(int k, const std::shared_ptr<const VSet>& v,
                                  std::size_t m, const Limits& limits) {
  const RelationKind rel = relation_for_theorem(k);
  if (k == 4) {
    if (!v->ground().has_inverse())
      throw PreconditionError(
          "theorem 4 needs a group structure on the ground set K");
    if (auto w = check_inversion_closed(*v)) {
      std::ostringstream msg;
      msg << "theorem 4 needs V closed under componentwise inversion; "
             "witness (";
      for (std::size_t i = 0; i < w->vector.size(); ++i)
        msg << (i ? "," : "") << w->vector[i];
      msg << ") has no inverse in V";
      throw PreconditionError(msg.str());
    }
  }
  VerificationReport report = run_relation(v, m, rel, limits);
  report.config.theorem = k;
  return report;
}

bool baseline_eq1(unsigned s, unsigned m) {
  if (s == 0 || m == 0) throw InputError("eq1 needs s >= 1 and m >= 1");
  // Exponent vector -> coefficient, collected from all s^m factor choices.
  std::map<std::vector<std::uint64_t>, BigCount> coeffs;
  std::vector<unsigned> pick(m, 0);
  while (true) {
    std::vector<std::uint64_t> expo(s, 0);
    for (unsigned p : pick) ++expo[p];
    coeffs[std::move(expo)] += 1;
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < s) break;
      pick[pos] = 0;
      if (pos == 0) goto done;
    }
  }
done:
  for (const auto& [expo, coeff] : coeffs)
    if (coeff != multinomial(m, Multiset<std::uint64_t>::from_values(expo)))
      return false;
  return true;
}

BigCount baseline_eq2(unsigned s, unsigned m) {
  BigCount sum = 0;
  weak_compositions(m, s, [&](const std::vector<std::uint64_t>& r) {
    sum += multinomial(m, Multiset<std::uint64_t>::from_values(r));
  });
  return sum;
}

bool baseline_eq3(unsigned m1, unsigned m2,
                  const std::vector<std::uint64_t>& r) {
  const BigCount lhs =
      multinomial(m1 + m2, Multiset<std::uint64_t>::from_values(r));
  BigCount rhs = 0;
  std::vector<std::uint64_t> k(r.size(), 0);
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == r.size()) {
      std::vector<std::uint64_t> rest(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) rest[i] = r[i] - k[i];
      rhs += multinomial(m1, Multiset<std::uint64_t>::from_values(k)) *
             multinomial(m2, Multiset<std::uint64_t>::from_values(rest));
      return;
    }
    for (std::uint64_t v = 0; v <= r[pos]; ++v) {
      k[pos] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  return lhs == rhs;
}

BigCount baseline_eq4(unsigned s, unsigned m1, unsigned m2) {
  BigCount sum = 0;
  weak_compositions(m1 + m2, s, [&](const std::vector<std::uint64_t>& r) {
    std::vector<std::uint64_t> k(r.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == r.size()) {
        std::vector<std::uint64_t> rest(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) rest[i] = r[i] - k[i];
        sum += multinomial(m1, Multiset<std::uint64_t>::from_values(k)) *
               multinomial(m2, Multiset<std::uint64_t>::from_values(rest));
        return;
      }
      for (std::uint64_t v = 0; v <= r[pos]; ++v) {
        k[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
  });
  return sum;
}

namespace {

std::string tuple_to_string(const std::vector<std::uint64_t>& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i)
    out += (i ? "," : "") + std::to_string(t[i]);
  return out + ")";
}

}  // namespace

BaselineResult check_eq1(unsigned s, unsigned m) {
  BaselineResult res;
  res.identity = "eq1";
  res.params = {{"s", s}, {"m", m}};
  res.ok = baseline_eq1(s, m);
  res.cases_checked = 1;
  if (!res.ok) res.witnesses.push_back("coefficient mismatch");
  return res;
}

BaselineResult check_eq2(unsigned s, unsigned m) {
  BaselineResult res;
  res.identity = "eq2";
  res.params = {{"s", s}, {"m", m}};
  res.lhs = int_pow(BigCount(s), m);
  res.rhs = baseline_eq2(s, m);
  res.ok = *res.lhs == *res.rhs;
  res.cases_checked = 1;
  return res;
}

BaselineResult check_eq3(unsigned s, unsigned m1, unsigned m2) {
  BaselineResult res;
  res.identity = "eq3";
  res.params = {{"s", s}, {"m1", m1}, {"m2", m2}};
  res.ok = true;
  weak_compositions(m1 + m2, s, [&](const std::vector<std::uint64_t>& r) {
    ++res.cases_checked;
    if (!baseline_eq3(m1, m2, r)) {
      res.ok = false;
      res.witnesses.push_back("r=" + tuple_to_string(r));
    }
  });
  return res;
}

BaselineResult check_eq4(unsigned s, unsigned m1, unsigned m2) {
  BaselineResult res;
  res.identity = "eq4";
  res.params = {{"s", s}, {"m1", m1}, {"m2", m2}};
  res.lhs = int_pow(BigCount(s), m1 + m2);
  res.rhs = baseline_eq4(s, m1, m2);
  res.ok = *res.lhs == *res.rhs;
  res.cases_checked = 1;
  return res;
}

}  // namespace powclass
