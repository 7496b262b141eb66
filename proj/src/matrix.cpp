#include "powclass/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace powclass {

MatrixA::MatrixA(std::shared_ptr<const VSet> vset,
                 const std::vector<std::size_t>& row_indices)
    : vset_(std::move(vset)),
      rows_(row_indices.size()),
      cols_(vset_->n()) {
  if (rows_ == 0) throw InputError("matrix must have at least one row");
  entries_.reserve(rows_ * cols_);
  for (std::size_t idx : row_indices) {
    if (idx >= vset_->size())
      throw InputError("row index " + std::to_string(idx) +
                       " out of range for |V| = " +
                       std::to_string(vset_->size()));
    const Vector& r = vset_->vectors()[idx];
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

MatrixA::MatrixA(std::shared_ptr<const VSet> vset, std::vector<Label> entries,
                 std::size_t rows)
    : vset_(std::move(vset)),
      rows_(rows),
      cols_(vset_->n()),
      entries_(std::move(entries)) {
  if (rows_ == 0) throw InputError("matrix must have at least one row");
  if (entries_.size() != rows_ * cols_)
    throw InputError("matrix entry count " + std::to_string(entries_.size()) +
                     " does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    Vector r(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_);
    if (!vset_->contains(r)) {
      std::ostringstream msg;
      msg << "matrix row " << i << " (";
      for (std::size_t j = 0; j < r.size(); ++j) msg << (j ? "," : "") << r[j];
      msg << ") is not a member of V";
      throw InputError(msg.str());
    }
  }
}

Vector MatrixA::row(std::size_t i) const {
  return Vector(entries_.begin() + i * cols_,
                entries_.begin() + (i + 1) * cols_);
}

Vector MatrixA::column(std::size_t j) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, j));
  return out;
}

std::string MatrixA::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ";";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << " ";
      out << at(i, j);
    }
  }
  return out.str();
}

Multiset<Label> row_content(const Vector& r) {
  return Multiset<Label>::from_values(r);
}

Multiset<Vector> col_multiset(const MatrixA& a) {
  std::vector<Vector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Multiset<Vector>::from_values(std::move(cols));
}

Multiset<Multiset<Label>> row_f_multiset(const MatrixA& a) {
  std::vector<Multiset<Label>> contents;
  contents.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    contents.push_back(row_content(a.row(i)));
  return Multiset<Multiset<Label>>::from_values(std::move(contents));
}

std::size_t t_count(const MatrixA& a) {
  const GroundSet& ground = a.vset().ground();
  if (!ground.has_inverse())
    throw PreconditionError(
        "t(A) needs a group structure on the ground set");
  std::size_t t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Vector r = a.row(i);
    if (row_content(r) != row_content(vector_inverse(r, ground))) ++t;
  }
  return t;
}

BigCount space_size(const VSet& v, std::size_t m) {
  if (m == 0) throw InputError("matrix space requires m >= 1");
  return int_pow(BigCount(v.size()), m);
}

BigCount for_each_matrix(const std::shared_ptr<const VSet>& v, std::size_t m,
                         const Limits& limits, const MatrixFn& fn) {
  const BigCount total = space_size(*v, m);
  if (total > limits.max_space)
    throw LimitError("enumeration limit exceeded: s^m = " + total.str() +
                     " > max_space = " + std::to_string(limits.max_space));
  std::vector<std::size_t> idx(m, 0);
  const std::size_t s = v->size();
  while (true) {
    fn(MatrixA(v, idx));
    std::size_t pos = m;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < s) break;
      idx[pos] = 0;
      if (pos == 0) return total;
    }
  }
}

void for_each_matrix_range(const std::shared_ptr<const VSet>& v, std::size_t m,
                           std::uint64_t begin, std::uint64_t end,
                           const MatrixFn& fn) {
  const std::size_t s = v->size();
  for (std::uint64_t linear = begin; linear < end; ++linear) {
    std::vector<std::size_t> idx(m, 0);
    std::uint64_t rest = linear;
    for (std::size_t pos = m; pos > 0; --pos) {
      idx[pos - 1] = static_cast<std::size_t>(rest % s);
      rest /= s;
    }
    fn(MatrixA(v, idx));
  }
}

}  // namespace powclass
