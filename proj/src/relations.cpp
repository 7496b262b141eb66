#include "powclass/relations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace powclass {

std::string relation_name(RelationKind rel) {
  switch (rel) {
    case RelationKind::C: return "c";
    case RelationKind::R: return "r";
    case RelationKind::RcOrbit: return "rc";
    case RelationKind::RscOrbit: return "rsc";
    case RelationKind::RcMeet: return "rc-meet";
  }
  throw InputError("unknown relation");
}

RelationKind parse_relation(const std::string& name) {
  if (name == "c") return RelationKind::C;
  if (name == "r") return RelationKind::R;
  if (name == "rc") return RelationKind::RcOrbit;
  if (name == "rsc") return RelationKind::RscOrbit;
  if (name == "rc-meet") return RelationKind::RcMeet;
  throw InputError("unknown relation \"" + name +
                   "\"; expected c, r, rc, rsc or rc-meet");
}

RelationKind relation_for_theorem(int k) {
  switch (k) {
    case 1: return RelationKind::C;
    case 2: return RelationKind::R;
    case 3: return RelationKind::RcOrbit;
    case 4: return RelationKind::RscOrbit;
  }
  throw InputError("theorem number must be 1, 2, 3 or 4");
}

std::string ClassKey::digest() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  auto mix = [&h](std::uint64_t byte) {
    h ^= byte & 0xff;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(relation));
  for (Label l : data) {
    auto u = static_cast<std::uint64_t>(l);
    for (int b = 0; b < 8; ++b) mix(u >> (8 * b));
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[h & 0xf];
    h >>= 4;
  }
  return out;
}

ClassKey key_c(const MatrixA& a) {
  std::vector<Vector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  std::sort(cols.begin(), cols.end());
  ClassKey key{RelationKind::C, {}};
  key.data.reserve(a.rows() * a.cols());
  for (const Vector& c : cols)
    key.data.insert(key.data.end(), c.begin(), c.end());
  return key;
}

ClassKey key_r(const MatrixA& a) {
  std::vector<Vector> contents;
  contents.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Vector r = a.row(i);
    std::sort(r.begin(), r.end());
    contents.push_back(std::move(r));
  }
  std::sort(contents.begin(), contents.end());
  ClassKey key{RelationKind::R, {}};
  key.data.reserve(a.rows() * a.cols());
  for (const Vector& c : contents)
    key.data.insert(key.data.end(), c.begin(), c.end());
  return key;
}

namespace {

// Lex-min matrix over the orbit of simultaneous row/column permutations,
// optionally extended by per-row inversion. For a fixed column arrangement
// the minimal row order is just the sorted rows; with inversion, each row
// independently takes the smaller of itself and its inverse, since replacing
// a multiset element by a larger one never shrinks the sorted reading. The
// search walks column arrangements depth-first, skipping duplicate column
// choices and pruning arrangements whose best possible first-row prefix
// already exceeds the incumbent.
class CanonicalSearch {
 public:
  CanonicalSearch(const MatrixA& a, bool with_inversion)
      : m_(a.rows()),
        n_(a.cols()),
        with_inversion_(with_inversion),
        entries_(a.entries()) {
    if (with_inversion_) {
      const GroundSet& g = a.vset().ground();
      inv_entries_.reserve(entries_.size());
      for (Label l : entries_) inv_entries_.push_back(g.inverse(l));
    }
    used_.assign(n_, false);
    chosen_.reserve(n_);
  }

  std::vector<Label> run() {
    dfs();
    return best_;
  }

 private:
  Label entry(std::size_t i, std::size_t c) const {
    return entries_[i * n_ + c];
  }
  Label inv_entry(std::size_t i, std::size_t c) const {
    return inv_entries_[i * n_ + c];
  }

  // Row i restricted to the chosen columns; with inversion, the smaller of
  // the two variants of that restriction.
  Vector variant_prefix(std::size_t i) const {
    Vector p;
    p.reserve(chosen_.size());
    for (std::size_t c : chosen_) p.push_back(entry(i, c));
    if (with_inversion_) {
      Vector q;
      q.reserve(chosen_.size());
      for (std::size_t c : chosen_) q.push_back(inv_entry(i, c));
      if (q < p) return q;
    }
    return p;
  }

  bool prunable() const {
    if (best_.empty()) return false;
    const std::size_t k = chosen_.size();
    Vector lb = variant_prefix(0);
    for (std::size_t i = 1; i < m_; ++i) lb = std::min(lb, variant_prefix(i));
    // lb bounds the first row of any completion from below.
    for (std::size_t j = 0; j < k; ++j) {
      if (lb[j] < best_[j]) return false;
      if (lb[j] > best_[j]) return true;
    }
    return false;
  }

  void finalize() {
    std::vector<Vector> rows;
    rows.reserve(m_);
    for (std::size_t i = 0; i < m_; ++i) rows.push_back(variant_prefix(i));
    std::sort(rows.begin(), rows.end());
    std::vector<Label> flat;
    flat.reserve(m_ * n_);
    for (const Vector& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    if (best_.empty() || flat < best_) best_ = std::move(flat);
  }

  void dfs() {
    if (chosen_.size() == n_) {
      finalize();
      return;
    }
    // Candidates ordered by full content; identical columns explored once.
    std::vector<std::pair<Vector, std::size_t>> cands;
    for (std::size_t c = 0; c < n_; ++c) {
      if (used_[c]) continue;
      Vector capsule;
      capsule.reserve(m_);
      for (std::size_t i = 0; i < m_; ++i) capsule.push_back(entry(i, c));
      cands.emplace_back(std::move(capsule), c);
    }
    std::sort(cands.begin(), cands.end());
    for (std::size_t ci = 0; ci < cands.size(); ++ci) {
      if (ci > 0 && cands[ci].first == cands[ci - 1].first) continue;
      const std::size_t c = cands[ci].second;
      chosen_.push_back(c);
      used_[c] = true;
      if (!prunable()) dfs();
      used_[c] = false;
      chosen_.pop_back();
    }
  }

  std::size_t m_, n_;
  bool with_inversion_;
  std::vector<Label> entries_;
  std::vector<Label> inv_entries_;
  std::vector<std::size_t> chosen_;
  std::vector<char> used_;
  std::vector<Label> best_;
};

void check_canon_guard(const MatrixA& a, const Limits& limits) {
  if (a.rows() > limits.max_canon_dim || a.cols() > limits.max_canon_dim)
    throw LimitError("canonicalization guard exceeded: " +
                     std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " matrix, max dimension " +
                     std::to_string(limits.max_canon_dim));
}

std::string format_vector(const Vector& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

}  // namespace

ClassKey key_rc(const MatrixA& a, const Limits& limits) {
  check_canon_guard(a, limits);
  return ClassKey{RelationKind::RcOrbit,
                  CanonicalSearch(a, /*with_inversion=*/false).run()};
}

ClassKey key_rsc(const MatrixA& a, const Limits& limits) {
  check_canon_guard(a, limits);
  if (!a.vset().ground().has_inverse())
    throw PreconditionError(
        "relation rsc needs a group structure on the ground set");
  return ClassKey{RelationKind::RscOrbit,
                  CanonicalSearch(a, /*with_inversion=*/true).run()};
}

ClassKey key_rc_meet(const MatrixA& a) {
  ClassKey key{RelationKind::RcMeet, key_r(a).data};
  const ClassKey col = key_c(a);
  key.data.insert(key.data.end(), col.data.begin(), col.data.end());
  return key;
}

ClassKey class_key(const MatrixA& a, RelationKind rel, const Limits& limits) {
  switch (rel) {
    case RelationKind::C: return key_c(a);
    case RelationKind::R: return key_r(a);
    case RelationKind::RcOrbit: return key_rc(a, limits);
    case RelationKind::RscOrbit: return key_rsc(a, limits);
    case RelationKind::RcMeet: return key_rc_meet(a);
  }
  throw InputError("unknown relation");
}

std::vector<MatrixA> orbit_bfs(const MatrixA& a, RelationKind rel,
                               const Limits& limits) {
  if (rel == RelationKind::R || rel == RelationKind::RcMeet) {
    // Not an orbit in general; collect the class from the X-stream.
    const ClassKey target = class_key(a, rel, limits);
    std::vector<MatrixA> out;
    for_each_matrix(a.vset_ptr(), a.rows(), limits, [&](const MatrixA& b) {
      if (class_key(b, rel, limits) == target) {
        if (out.size() >= limits.max_orbit)
          throw LimitError("orbit limit exceeded: class larger than " +
                           std::to_string(limits.max_orbit));
        out.push_back(b);
      }
    });
    return out;
  }
  if (rel == RelationKind::RscOrbit && !a.vset().ground().has_inverse())
    throw PreconditionError(
        "relation rsc needs a group structure on the ground set");

  const std::size_t m = a.rows(), n = a.cols();
  const GroundSet& ground = a.vset().ground();
  std::set<MatrixA> seen{a};
  std::deque<const MatrixA*> queue{&*seen.begin()};
  auto visit = [&](std::vector<Label> entries) {
    MatrixA b(a.vset_ptr(), std::move(entries), m);
    auto [pos, inserted] = seen.insert(std::move(b));
    if (inserted) {
      if (seen.size() > limits.max_orbit)
        throw LimitError("orbit limit exceeded: more than " +
                         std::to_string(limits.max_orbit) + " members");
      queue.push_back(&*pos);
    }
  };
  while (!queue.empty()) {
    const MatrixA& cur = *queue.front();
    queue.pop_front();
    if (rel != RelationKind::C) {
      for (std::size_t i = 0; i + 1 < m; ++i) {
        std::vector<Label> e = cur.entries();
        for (std::size_t j = 0; j < n; ++j)
          std::swap(e[i * n + j], e[(i + 1) * n + j]);
        visit(std::move(e));
      }
    }
    for (std::size_t j = 0; j + 1 < n; ++j) {
      std::vector<Label> e = cur.entries();
      for (std::size_t i = 0; i < m; ++i)
        std::swap(e[i * n + j], e[i * n + j + 1]);
      visit(std::move(e));
    }
    if (rel == RelationKind::RscOrbit) {
      for (std::size_t i = 0; i < m; ++i) {
        std::vector<Label> e = cur.entries();
        for (std::size_t j = 0; j < n; ++j)
          e[i * n + j] = ground.inverse(e[i * n + j]);
        visit(std::move(e));
      }
    }
  }
  return std::vector<MatrixA>(seen.begin(), seen.end());
}

BigCount formula_class_size(const ClassRecord& rec, RelationKind rel) {
  const std::size_t m = rec.representative.rows();
  const std::size_t n = rec.representative.cols();
  switch (rel) {
    case RelationKind::C: return multinomial(n, rec.mult_col);
    case RelationKind::R: return multinomial(m, rec.mult_row_f);
    case RelationKind::RcOrbit:
    case RelationKind::RcMeet:
      return multinomial(m, rec.mult_row_f) * multinomial(n, rec.mult_col);
    case RelationKind::RscOrbit: {
      if (!rec.t)
        throw PreconditionError("2^t factor needs an inverse map on K");
      return int_pow(BigCount(2), *rec.t) * multinomial(m, rec.mult_row_f) *
             multinomial(n, rec.mult_col);
    }
  }
  throw InputError("unknown relation");
}

BigCount formula_value_at(const MatrixA& member, RelationKind rel) {
  ClassRecord rec{ClassKey{rel, {}},
                  member,
                  BigCount(0),
                  BigCount(0),
                  mult_profile(row_f_multiset(member)),
                  mult_profile(col_multiset(member)),
                  std::nullopt};
  if (member.vset().ground().has_inverse()) rec.t = t_count(member);
  return formula_class_size(rec, rel);
}

PartitionAccumulator::PartitionAccumulator(RelationKind rel,
                                           const Limits& limits)
    : rel_(rel), limits_(limits) {}

void PartitionAccumulator::add(const MatrixA& a) {
  ClassKey key = class_key(a, rel_, limits_);
  auto [pos, inserted] = classes_.try_emplace(std::move(key));
  Accum& acc = pos->second;
  acc.brute += 1;
  if (!acc.rep || a < *acc.rep) acc.rep = a;
}

void PartitionAccumulator::merge(const PartitionAccumulator& other) {
  for (const auto& [key, acc] : other.classes_) {
    auto [pos, inserted] = classes_.try_emplace(key);
    Accum& mine = pos->second;
    mine.brute += acc.brute;
    if (!mine.rep || (acc.rep && *acc.rep < *mine.rep)) mine.rep = acc.rep;
  }
}

std::vector<ClassRecord> PartitionAccumulator::finish() const {
  std::vector<ClassRecord> records;
  records.reserve(classes_.size());
  for (const auto& [key, acc] : classes_) {
    const MatrixA& rep = *acc.rep;
    ClassRecord rec{key,
                    rep,
                    acc.brute,
                    BigCount(0),
                    mult_profile(row_f_multiset(rep)),
                    mult_profile(col_multiset(rep)),
                    std::nullopt};
    if (rep.vset().ground().has_inverse()) rec.t = t_count(rep);
    rec.formula_size = formula_class_size(rec, rel_);
    records.push_back(std::move(rec));
  }
  std::sort(records.begin(), records.end(),
            [](const ClassRecord& a, const ClassRecord& b) {
              return a.representative < b.representative;
            });
  return records;
}

std::vector<ClassRecord> partition_X(const std::shared_ptr<const VSet>& v,
                                     std::size_t m, RelationKind rel,
                                     const Limits& limits) {
  if (rel == RelationKind::RscOrbit) {
    if (!v->ground().has_inverse())
      throw PreconditionError(
          "relation rsc needs a group structure on the ground set");
    if (auto w = check_inversion_closed(*v))
      throw PreconditionError(
          "V is not closed under componentwise inversion: witness " +
          format_vector(w->vector));
  }
  PartitionAccumulator acc(rel, limits);
  const BigCount total =
      for_each_matrix(v, m, limits, [&](const MatrixA& a) { acc.add(a); });
  std::vector<ClassRecord> records = acc.finish();
  BigCount sum = 0;
  for (const ClassRecord& rec : records) sum += rec.brute_size;
  if (sum != total)
    throw std::logic_error("partition lost matrices: " + sum.str() + " vs " +
                           total.str());
  return records;
}

}  // namespace powclass
