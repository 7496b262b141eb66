#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "powclass/bigint.hpp"
#include "powclass/limits.hpp"
#include "powclass/multiset.hpp"
#include "powclass/vset.hpp"

namespace powclass {

/// An m-by-n matrix over the ground set whose rows all belong to the
/// attached V. Entries are stored row-major as raw labels; comparison is the
/// row-major lexicographic order that every canonicalization relies on.
class MatrixA {
 public:
  // Rows picked from V by index. This is the enumeration path.
  MatrixA(std::shared_ptr<const VSet> vset,
          const std::vector<std::size_t>& row_indices);

  // Raw entries; every row is validated to be a member of V.
  MatrixA(std::shared_ptr<const VSet> vset, std::vector<Label> entries,
          std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Label at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Label>& entries() const { return entries_; }
  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;

  const VSet& vset() const { return *vset_; }
  const std::shared_ptr<const VSet>& vset_ptr() const { return vset_; }

  std::string to_string() const;  // "0 1;1 0"

  friend bool operator==(const MatrixA& a, const MatrixA& b) {
    return a.entries_ == b.entries_;
  }
  friend auto operator<=>(const MatrixA& a, const MatrixA& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::shared_ptr<const VSet> vset_;
  std::size_t rows_, cols_;
  std::vector<Label> entries_;
};

// f(r): the content multiset of a row.
Multiset<Label> row_content(const Vector& r);

// col(A): the multiset of the n columns, each an m-tuple.
Multiset<Vector> col_multiset(const MatrixA& a);

// row_f(A): the multiset of the m row content multisets.
Multiset<Multiset<Label>> row_f_multiset(const MatrixA& a);

// t(A): how many rows have f(r) != f(r^{-1}). Needs an inverse map.
std::size_t t_count(const MatrixA& a);

// |X| = s^m.
BigCount space_size(const VSet& v, std::size_t m);

using MatrixFn = std::function<void(const MatrixA&)>;

// Streams all of X = V^m in lexicographic row-tuple order (which coincides
// with row-major lexicographic order on the matrices). Returns the exact
// count s^m. Throws LimitError naming s^m when it exceeds limits.max_space.
BigCount for_each_matrix(const std::shared_ptr<const VSet>& v, std::size_t m,
                         const Limits& limits, const MatrixFn& fn);

// Contiguous sub-range [begin, end) of the same enumeration, for partitioned
// consumption. The caller is responsible for guards.
void for_each_matrix_range(const std::shared_ptr<const VSet>& v, std::size_t m,
                           std::uint64_t begin, std::uint64_t end,
                           const MatrixFn& fn);

}  // namespace powclass
