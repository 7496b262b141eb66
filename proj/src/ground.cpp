#include "powclass/ground.hpp"

#include <algorithm>

namespace powclass {

std::vector<Label> GroundSet::sorted_distinct(std::vector<Label> labels) {
  if (labels.empty()) throw InputError("ground set must be nonempty");
  std::sort(labels.begin(), labels.end());
  for (std::size_t i = 1; i < labels.size(); ++i)
    if (labels[i] == labels[i - 1])
      throw InputError("ground set has duplicate label " +
                       std::to_string(labels[i]));
  return labels;
}

GroundSet GroundSet::plain(std::vector<Label> labels) {
  GroundSet g;
  g.labels_ = sorted_distinct(std::move(labels));
  return g;
}

GroundSet GroundSet::cyclic(std::uint64_t q) {
  if (q == 0) throw InputError("cyclic ground requires q >= 1");
  GroundSet g;
  g.labels_.reserve(q);
  for (std::uint64_t i = 0; i < q; ++i)
    g.labels_.push_back(static_cast<Label>(i));
  g.inverse_.resize(q);
  g.table_.resize(q * q);
  for (std::uint64_t i = 0; i < q; ++i) {
    g.inverse_[i] = (q - i) % q;
    for (std::uint64_t j = 0; j < q; ++j) g.table_[i * q + j] = (i + j) % q;
  }
  g.group_desc_ = "cyclic:" + std::to_string(q);
  return g;
}

GroundSet GroundSet::with_table(std::vector<Label> labels,
                                const std::vector<std::vector<Label>>& table) {
  GroundSet g;
  g.labels_ = sorted_distinct(std::move(labels));
  const std::size_t q = g.labels_.size();
  if (table.size() != q)
    throw InputError("group table must have one row per label");
  g.table_.assign(q * q, 0);
  for (std::size_t i = 0; i < q; ++i) {
    if (table[i].size() != q)
      throw InputError("group table row " + std::to_string(i) +
                       " must have one entry per label");
    for (std::size_t j = 0; j < q; ++j) {
      if (!g.contains(table[i][j]))
        throw InputError("group table not closed: entry " +
                         std::to_string(table[i][j]) + " at row " +
                         std::to_string(i) + ", column " + std::to_string(j) +
                         " is not a ground label");
      g.table_[i * q + j] = g.index_of(table[i][j]);
    }
  }
  // Associativity.
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      for (std::size_t c = 0; c < q; ++c) {
        const std::size_t ab_c = g.table_[g.table_[a * q + b] * q + c];
        const std::size_t a_bc = g.table_[a * q + g.table_[b * q + c]];
        if (ab_c != a_bc)
          throw InputError(
              "group table violates associativity at a=" +
              std::to_string(g.labels_[a]) + ", b=" +
              std::to_string(g.labels_[b]) + ", c=" +
              std::to_string(g.labels_[c]));
      }
  // Identity.
  std::size_t identity = q;
  for (std::size_t e = 0; e < q; ++e) {
    bool is_identity = true;
    for (std::size_t a = 0; a < q; ++a)
      if (g.table_[e * q + a] != a || g.table_[a * q + e] != a) {
        is_identity = false;
        break;
      }
    if (is_identity) {
      identity = e;
      break;
    }
  }
  if (identity == q) throw InputError("group table has no identity element");
  // Inverses.
  g.inverse_.assign(q, q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b)
      if (g.table_[a * q + b] == identity && g.table_[b * q + a] == identity) {
        g.inverse_[a] = b;
        break;
      }
    if (g.inverse_[a] == q)
      throw InputError("group table element " + std::to_string(g.labels_[a]) +
                       " has no inverse");
  }
  g.group_desc_ = "table";
  return g;
}

GroundSet GroundSet::with_negation(std::vector<Label> labels) {
  GroundSet g;
  g.labels_ = sorted_distinct(std::move(labels));
  g.inverse_.resize(g.labels_.size());
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    const Label neg = -g.labels_[i];
    if (!g.contains(neg))
      throw InputError("labels not closed under negation: -(" +
                       std::to_string(g.labels_[i]) + ") missing");
    g.inverse_[i] = g.index_of(neg);
  }
  g.group_desc_ = "negation";
  return g;
}

bool GroundSet::contains(Label l) const {
  return std::binary_search(labels_.begin(), labels_.end(), l);
}

std::size_t GroundSet::index_of(Label l) const {
  auto pos = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (pos == labels_.end() || *pos != l)
    throw InputError("unknown ground label " + std::to_string(l));
  return static_cast<std::size_t>(pos - labels_.begin());
}

Label GroundSet::inverse(Label l) const {
  if (!has_inverse())
    throw PreconditionError(
        "ground set has no group structure (inverse map required)");
  return labels_[inverse_[index_of(l)]];
}

Label GroundSet::op(Label a, Label b) const {
  if (!has_table())
    throw PreconditionError("ground set has no operation table");
  return labels_[table_[index_of(a) * size() + index_of(b)]];
}

Vector vector_inverse(const Vector& r, const GroundSet& ground) {
  Vector out;
  out.reserve(r.size());
  for (Label l : r) out.push_back(ground.inverse(l));
  return out;
}

}  // namespace powclass
