#include "powclass/weights.hpp"

namespace powclass {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::int64_t mod_reduce(Label x, std::int64_t p) {
  std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_pow(std::int64_t base, std::uint64_t exp, std::int64_t p) {
  std::int64_t out = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) out = out * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return out;
}

}  // namespace

std::size_t rank_mod_p(const MatrixA& a, std::uint64_t p) {
  if (!is_prime(p))
    throw PreconditionError("rank weight needs a prime modulus, got " +
                            std::to_string(p));
  if (p >= (1ull << 31))
    throw InputError("rank modulus too large: p must be < 2^31");
  const auto prime = static_cast<std::int64_t>(p);
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::int64_t> w(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w[i * n + j] = mod_reduce(a.at(i, j), prime);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t pivot = rank;
    while (pivot < m && w[pivot * n + col] == 0) ++pivot;
    if (pivot == m) continue;
    for (std::size_t j = col; j < n; ++j)
      std::swap(w[rank * n + j], w[pivot * n + j]);
    const std::int64_t inv = mod_pow(w[rank * n + col], p - 2, prime);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const std::int64_t factor = w[i * n + col] * inv % prime;
      if (factor == 0) continue;
      for (std::size_t j = col; j < n; ++j)
        w[i * n + j] =
            mod_reduce(w[i * n + j] - factor * w[rank * n + j], prime);
    }
    ++rank;
  }
  return rank;
}

BigRational weight_value(const MatrixA& a, const WeightSpec& w) {
  switch (w.kind) {
    case WeightSpec::Kind::Unit:
      return BigRational(1);
    case WeightSpec::Kind::RankEq:
      return BigRational(rank_mod_p(a, w.p) == w.target_rank ? 1 : 0);
    case WeightSpec::Kind::UserTable: {
      auto pos = w.table.find(a.entries());
      if (pos == w.table.end())
        throw InputError("weight table has no value for matrix " +
                         a.to_string());
      return pos->second;
    }
  }
  throw InputError("unknown weight kind");
}

BigRational expectation(const VerificationReport& report, const WeightSpec& w,
                        const Limits& limits) {
  BigRational sum = 0;
  for_each_matrix(report.vset, report.config.m, limits,
                  [&](const MatrixA& a) { sum += weight_value(a, w); });
  return sum / BigRational(report.expected);
}

std::vector<std::pair<ClassKey, BigRational>> class_distribution(
    const VerificationReport& report) {
  std::vector<std::pair<ClassKey, BigRational>> out;
  out.reserve(report.rows.size());
  for (const ClassRow& row : report.rows)
    out.emplace_back(row.record.key,
                     BigRational(row.record.brute_size) /
                         BigRational(report.expected));
  return out;
}

}  // namespace powclass
