#pragma once

#include <map>
#include <string>
#include <vector>

#include "powclass/verify.hpp"

namespace powclass {

/// Weight function on matrices. Unit and rank-indicator weights are
/// evaluated per matrix during a fresh pass over X; a user table maps
/// explicit matrices to rational values.
struct WeightSpec {
  enum class Kind { Unit, RankEq, UserTable };
  Kind kind = Kind::Unit;
  std::uint64_t p = 0;            // RankEq: prime modulus
  std::uint64_t target_rank = 0;  // RankEq
  std::map<std::vector<Label>, BigRational> table;  // UserTable, keyed by
                                                    // row-major entries
  std::string text = "unit";  // canonical spec string for reports
};

bool is_prime(std::uint64_t p);

// Rank over the field of p elements; entries are reduced mod p (negative
// labels included). p must be prime and < 2^31.
std::size_t rank_mod_p(const MatrixA& a, std::uint64_t p);

BigRational weight_value(const MatrixA& a, const WeightSpec& w);

// E[w] = (sum over X of w(A)) / s^m, exact.
BigRational expectation(const VerificationReport& report, const WeightSpec& w,
                        const Limits& limits = {});

// Probability of each class, brute_size / s^m, aligned with report.rows.
// The probabilities sum to exactly 1.
std::vector<std::pair<ClassKey, BigRational>> class_distribution(
    const VerificationReport& report);

}  // namespace powclass
