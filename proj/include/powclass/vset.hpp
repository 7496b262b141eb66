#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "powclass/ground.hpp"

namespace powclass {

struct InvarianceWitness {
  Vector vector;         // member whose swapped image is missing
  std::size_t swap_pos;  // adjacent transposition (swap_pos, swap_pos+1)
  Vector image;
};

struct InjectivityWitness {
  Vector first, second;  // distinct members with equal content multisets
};

struct ClosureWitness {
  Vector vector;  // member whose componentwise inverse is missing
};

/// A finite, nonempty, S_n-invariant subset V of K^n. Vectors are kept
/// sorted ascending; every invariant is validated at construction, including
/// S_n-invariance via adjacent transpositions (which generate S_n).
class VSet {
 public:
  VSet(GroundSet ground, std::size_t n, std::vector<Vector> vectors,
       std::string provenance);

  const GroundSet& ground() const { return ground_; }
  std::size_t n() const { return n_; }
  std::size_t size() const { return vectors_.size(); }  // s = |V|
  const std::vector<Vector>& vectors() const { return vectors_; }
  bool contains(const Vector& v) const;
  const std::string& provenance() const { return provenance_; }

 private:
  GroundSet ground_;
  std::size_t n_;
  std::vector<Vector> vectors_;
  std::string provenance_;
};

// nullopt means the set is S_n-invariant; otherwise a witness is returned.
// Usable before VSet construction, hence the raw vector list.
std::optional<InvarianceWitness> check_sn_invariant(
    const std::vector<Vector>& vectors);

// nullopt means no two distinct members share a content multiset.
std::optional<InjectivityWitness> check_f_injective(const VSet& v);

// nullopt means r in V implies r^{-1} in V. Requires an inverse map.
std::optional<ClosureWitness> check_inversion_closed(const VSet& v);

// V = {(i,...,i)} over the first s labels of the ground set.
VSet gen_diagonal(std::size_t s, std::size_t n, GroundSet ground);

// All binary n-vectors of Hamming weight h, over the mod-2 ground set.
VSet gen_constant_weight(std::size_t n, std::uint64_t h);

// All n-vectors over {0,...,q-1} where label a appears exactly h[a] times;
// n = sum h[a]. Ground set is cyclic mod q.
VSet gen_composition(std::uint64_t q, const std::vector<std::uint64_t>& h);

// All integer n-vectors of squared norm h; s = r_n(h). The ground set is the
// integer interval [-floor(sqrt(h)), floor(sqrt(h))]; `attach_negation`
// equips it with x -> -x as the inverse map.
VSet gen_squares(std::size_t n, std::uint64_t h, bool attach_negation);

// JSON document: {"n":, "labels": [...], "group": optional, "vectors": [...]}
// where "group" is "cyclic:q", "negation" or {"table": [[...], ...]}.
// The loader re-validates every invariant.
VSet load_vset(const std::string& path);
void save_vset(const VSet& v, const std::string& path);

}  // namespace powclass
