#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "powclass/limits.hpp"
#include "powclass/matrix.hpp"

namespace powclass {

/// The equivalence relations on X. RcOrbit and RscOrbit are orbits under
/// simultaneous row/column permutations (plus per-row inversion for
/// RscOrbit). RcMeet is the conjunction "same row_f and same col"; it
/// refines RcOrbit, strictly on some spaces, and stays available for
/// exploration but never drives a verification verdict.
enum class RelationKind { C, R, RcOrbit, RscOrbit, RcMeet };

std::string relation_name(RelationKind rel);
RelationKind parse_relation(const std::string& name);
RelationKind relation_for_theorem(int k);

/// Canonical class identifier: two matrices get equal keys iff they lie in
/// the same class under the relation's semantics.
struct ClassKey {
  RelationKind relation;
  std::vector<Label> data;

  friend bool operator==(const ClassKey&, const ClassKey&) = default;
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;

  std::string digest() const;  // 16 hex chars, deterministic across runs
};

// key = sorted column multiset (each column an m-tuple).
ClassKey key_c(const MatrixA& a);

// key = sorted list of sorted row contents.
ClassKey key_r(const MatrixA& a);

// key = lexicographically minimal matrix over the S_m x S_n orbit,
// found by branch-and-prune search over column arrangements.
ClassKey key_rc(const MatrixA& a, const Limits& limits = {});

// As key_rc with per-row inversion choices added to the orbit.
ClassKey key_rsc(const MatrixA& a, const Limits& limits = {});

// Conjunction semantics: concatenation of key_r and key_c.
ClassKey key_rc_meet(const MatrixA& a);

ClassKey class_key(const MatrixA& a, RelationKind rel,
                   const Limits& limits = {});

// Independent class oracle. For RcOrbit/RscOrbit and C: explicit closure
// under the generator moves (adjacent row/column transpositions, single-row
// inversion). For R and RcMeet the class is not an orbit in general, so the
// members are collected by filtering the X-stream of the attached V.
// Returns the class sorted ascending.
std::vector<MatrixA> orbit_bfs(const MatrixA& a, RelationKind rel,
                               const Limits& limits = {});

/// One equivalence class: canonical key, lex-min representative, brute-force
/// size, closed-form size, and the representative's statistics.
struct ClassRecord {
  ClassKey key;
  MatrixA representative;
  BigCount brute_size;
  BigCount formula_size;
  Multiset<std::uint64_t> mult_row_f;
  Multiset<std::uint64_t> mult_col;
  std::optional<std::size_t> t;  // present when the ground set has inverses
};

// The theorem's closed-form size for the class, evaluated at the stored
// representative: C -> binom(n, Mult(col)); R -> binom(m, Mult(row_f));
// RcOrbit/RcMeet -> the product; RscOrbit -> 2^t times the product.
BigCount formula_class_size(const ClassRecord& rec, RelationKind rel);

// The same closed form evaluated at an arbitrary class member. Exposes the
// representative dependence of the 2^t formula.
BigCount formula_value_at(const MatrixA& member, RelationKind rel);

/// Keyed aggregation of an X-stream into classes. Merging accumulators is
/// commutative and associative (sizes add, representatives take the lex
/// minimum), so a partitioned stream may be combined in any order.
class PartitionAccumulator {
 public:
  PartitionAccumulator(RelationKind rel, const Limits& limits);

  void add(const MatrixA& a);
  void merge(const PartitionAccumulator& other);
  std::vector<ClassRecord> finish() const;  // sorted by representative

 private:
  struct Accum {
    BigCount brute;
    std::optional<MatrixA> rep;
  };
  RelationKind rel_;
  Limits limits_;
  std::map<ClassKey, Accum> classes_;
};

// Partition of X = V^m under the relation. One record per class; the brute
// sizes always sum to s^m exactly. RscOrbit requires an inverse map on the
// ground set and V closed under inversion.
std::vector<ClassRecord> partition_X(const std::shared_ptr<const VSet>& v,
                                     std::size_t m, RelationKind rel,
                                     const Limits& limits = {});

}  // namespace powclass
