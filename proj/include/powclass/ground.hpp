#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powclass/errors.hpp"

namespace powclass {

using Label = std::int64_t;
using Vector = std::vector<Label>;

/// The alphabet K of matrix entries: an ordered set of distinct integer
/// labels, optionally with a finite-group structure. Only the inverse map is
/// ever consumed by the equivalence engine; the full operation table exists
/// so explicit tables can be validated against the group axioms.
///
/// The label order drives every lexicographic canonicalization downstream.
class GroundSet {
 public:
  static GroundSet plain(std::vector<Label> labels);

  // {0,...,q-1} under addition mod q.
  static GroundSet cyclic(std::uint64_t q);

  // Explicit operation table, table[i][j] = labels[i] * labels[j] given as
  // label values. Validated: closure, associativity, identity, inverses.
  static GroundSet with_table(std::vector<Label> labels,
                              const std::vector<std::vector<Label>>& table);

  // Inverse-only structure x -> -x (no operation table). Labels must be
  // closed under negation.
  static GroundSet with_negation(std::vector<Label> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<Label>& labels() const { return labels_; }
  bool contains(Label l) const;
  std::size_t index_of(Label l) const;  // InputError on unknown label

  bool has_inverse() const { return !inverse_.empty(); }
  bool has_table() const { return !table_.empty(); }

  Label inverse(Label l) const;    // PreconditionError without inversion
  Label op(Label a, Label b) const;  // PreconditionError without table

  // "none", "cyclic:q", "table" or "negation"; used for provenance.
  const std::string& group_desc() const { return group_desc_; }

 private:
  GroundSet() = default;
  static std::vector<Label> sorted_distinct(std::vector<Label> labels);

  std::vector<Label> labels_;          // sorted ascending, distinct
  std::vector<std::size_t> inverse_;   // index -> index; empty if none
  std::vector<std::size_t> table_;     // q*q indices row-major; empty if none
  std::string group_desc_ = "none";
};

// Componentwise group inverse of a vector.
Vector vector_inverse(const Vector& r, const GroundSet& ground);

}  // namespace powclass
