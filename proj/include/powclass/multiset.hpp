#pragma once

#include <algorithm>
#include <compare>
#include <concepts>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "powclass/bigint.hpp"
#include "powclass/errors.hpp"

namespace powclass {

/// Finite multiset over an ordered element domain.
///
/// Stored canonically as (value, count) pairs sorted by value, so structural
/// equality is multiset equality and comparison is deterministic. Immutable
/// after construction.
template <typename T>
class Multiset {
 public:
  using Item = std::pair<T, std::uint64_t>;

  Multiset() = default;

  static Multiset from_values(std::vector<T> values) {
    std::sort(values.begin(), values.end());
    Multiset out;
    for (auto& v : values) {
      if (!out.items_.empty() && out.items_.back().first == v) {
        ++out.items_.back().second;
      } else {
        out.items_.emplace_back(std::move(v), 1);
      }
    }
    return out;
  }

  // Pre-counted items; duplicates are merged, zero counts dropped.
  static Multiset from_counts(std::vector<Item> items) {
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.first < b.first; });
    Multiset out;
    for (auto& it : items) {
      if (it.second == 0) continue;
      if (!out.items_.empty() && out.items_.back().first == it.first) {
        out.items_.back().second += it.second;
      } else {
        out.items_.push_back(std::move(it));
      }
    }
    return out;
  }

  bool empty() const { return items_.empty(); }
  std::size_t support_size() const { return items_.size(); }

  std::uint64_t cardinality() const {
    std::uint64_t total = 0;
    for (const auto& it : items_) total += it.second;
    return total;
  }

  std::uint64_t multiplicity(const T& value) const {
    auto pos = std::lower_bound(
        items_.begin(), items_.end(), value,
        [](const Item& it, const T& v) { return it.first < v; });
    if (pos == items_.end() || pos->first != value) return 0;
    return pos->second;
  }

  const std::vector<Item>& items() const { return items_; }

  // Values expanded with multiplicity, ascending.
  std::vector<T> expand() const {
    std::vector<T> out;
    out.reserve(cardinality());
    for (const auto& [v, c] : items_)
      for (std::uint64_t k = 0; k < c; ++k) out.push_back(v);
    return out;
  }

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend auto operator<=>(const Multiset&, const Multiset&) = default;

 private:
  std::vector<Item> items_;
};

/// Mult(S): the multiset of multiplicities of the distinct elements of S.
template <typename T>
Multiset<std::uint64_t> mult_profile(const Multiset<T>& s) {
  std::vector<std::uint64_t> counts;
  counts.reserve(s.support_size());
  for (const auto& it : s.items()) counts.push_back(it.second);
  return Multiset<std::uint64_t>::from_values(std::move(counts));
}

/// Multinomial coefficient m!/prod(r!) over the multiset {r_1,...,r_q},
/// taken WITH multiplicity. Exactly 0 when the parts do not sum to m.
template <std::integral T>
BigCount multinomial(std::uint64_t m, const Multiset<T>& parts) {
  BigCount sum = 0;
  for (const auto& [value, count] : parts.items()) {
    if constexpr (std::is_signed_v<T>) {
      if (value < 0)
        throw InputError("multinomial: negative part " + std::to_string(value));
    }
    sum += BigCount(value) * count;
  }
  if (sum != m) return 0;
  BigCount denom = 1;
  for (const auto& [value, count] : parts.items())
    denom *= int_pow(factorial(static_cast<std::uint64_t>(value)), count);
  return factorial(m) / denom;
}

/// Yields every tuple of `parts` nonnegative integers summing to m, each
/// exactly once, in ascending lexicographic order.
inline void weak_compositions(
    std::uint64_t m, std::size_t parts,
    const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  if (parts == 0) throw InputError("weak_compositions: parts must be >= 1");
  std::vector<std::uint64_t> tuple(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t remaining) -> void {
    if (pos + 1 == parts) {
      tuple[pos] = remaining;
      fn(tuple);
      return;
    }
    for (std::uint64_t v = 0; v <= remaining; ++v) {
      tuple[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, m);
}

}  // namespace powclass
