#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <memory>

#include "powclass/weights.hpp"

using namespace powclass;

namespace {

std::shared_ptr<const VSet> diag(std::size_t s, std::size_t n,
                                 std::uint64_t q = 0) {
  GroundSet g = q ? GroundSet::cyclic(q) : [&] {
    std::vector<Label> labels;
    for (std::size_t i = 0; i < s; ++i) labels.push_back(Label(i));
    return GroundSet::plain(labels);
  }();
  return std::make_shared<const VSet>(gen_diagonal(s, n, std::move(g)));
}

MatrixA from_rows(const std::shared_ptr<const VSet>& v,
                  std::vector<Vector> rows) {
  std::vector<Label> flat;
  for (const Vector& r : rows) flat.insert(flat.end(), r.begin(), r.end());
  return MatrixA(v, std::move(flat), rows.size());
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(31));
  CHECK(!is_prime(1));
  CHECK(!is_prime(4));
  CHECK(!is_prime(91));
}

TEST_CASE("rank_mod_p") {
  auto v = diag(2, 2, 2);
  CHECK(rank_mod_p(from_rows(v, {{0, 0}, {0, 0}}), 2) == 0);
  CHECK(rank_mod_p(from_rows(v, {{1, 1}, {1, 1}}), 2) == 1);
  CHECK(rank_mod_p(from_rows(v, {{0, 0}, {1, 1}}), 2) == 1);

  auto vw = std::make_shared<const VSet>(gen_constant_weight(2, 1));
  CHECK(rank_mod_p(from_rows(vw, {{1, 0}, {0, 1}}), 2) == 2);
  CHECK(rank_mod_p(from_rows(vw, {{1, 0}, {1, 0}}), 2) == 1);

  // Negative labels reduce mod p: (-1) = 1 mod 2, so (1,-1) has rank 1 and
  // [[1,-1],[-1,1]] stays rank 1 over F_2.
  auto vs = std::make_shared<const VSet>(gen_squares(2, 2, false));
  CHECK(rank_mod_p(from_rows(vs, {{1, -1}, {-1, 1}}), 2) == 1);
  CHECK(rank_mod_p(from_rows(vs, {{1, -1}, {-1, 1}}), 3) == 1);
  CHECK(rank_mod_p(from_rows(vs, {{1, 1}, {1, -1}}), 2) == 1);
  CHECK(rank_mod_p(from_rows(vs, {{1, 1}, {1, -1}}), 3) == 2);

  CHECK_THROWS_WITH_AS(rank_mod_p(from_rows(v, {{0, 0}}), 4),
                       doctest::Contains("prime"), PreconditionError);
}

TEST_CASE("class_distribution") {
  auto report = run_relation(diag(2, 1), 2, RelationKind::RcOrbit);
  auto dist = class_distribution(report);
  REQUIRE(dist.size() == 3);
  BigRational total = 0;
  std::vector<BigRational> probs;
  for (const auto& [key, p] : dist) {
    probs.push_back(p);
    total += p;
  }
  CHECK(total == BigRational(1));
  std::sort(probs.begin(), probs.end());
  CHECK(probs[0] == BigRational(1, 4));
  CHECK(probs[1] == BigRational(1, 4));
  CHECK(probs[2] == BigRational(1, 2));

  // Single-class partition.
  auto single = run_relation(diag(1, 1), 2, RelationKind::C);
  auto sdist = class_distribution(single);
  REQUIRE(sdist.size() == 1);
  CHECK(sdist[0].second == BigRational(1));

  // mod-3 diag RSC: 1/9, 4/9, 4/9.
  auto rsc = run_relation(diag(3, 1, 3), 2, RelationKind::RscOrbit);
  auto rdist = class_distribution(rsc);
  REQUIRE(rdist.size() == 3);
  CHECK(rdist[0].second == BigRational(1, 9));
  CHECK(rdist[1].second == BigRational(4, 9));
  CHECK(rdist[2].second == BigRational(4, 9));
}

TEST_CASE("expectation with the unit weight is 1") {
  auto report = run_relation(diag(3, 2, 3), 2, RelationKind::C);
  WeightSpec unit;
  CHECK(expectation(report, unit) == BigRational(1));
}

TEST_CASE("rank expectation over diag(s=2,n=2) mod 2") {
  auto report = run_relation(diag(2, 2, 2), 2, RelationKind::C);
  WeightSpec rank1{WeightSpec::Kind::RankEq, 2, 1, {}, "rank_eq:p=2,r=1"};
  CHECK(expectation(report, rank1) == BigRational(3, 4));
  WeightSpec rank0{WeightSpec::Kind::RankEq, 2, 0, {}, "rank_eq:p=2,r=0"};
  CHECK(expectation(report, rank0) == BigRational(1, 4));

  // Rank indicators over all target ranks sum to 1.
  for (std::uint64_t p : {2, 3}) {
    BigRational sum = 0;
    for (std::uint64_t r = 0; r <= 2; ++r) {
      WeightSpec w{WeightSpec::Kind::RankEq, p, r, {}, ""};
      sum += expectation(report, w);
    }
    CHECK(sum == BigRational(1));
  }
}

TEST_CASE("user table weights") {
  auto v = diag(2, 1);
  auto report = run_relation(v, 1, RelationKind::C);
  WeightSpec w;
  w.kind = WeightSpec::Kind::UserTable;
  w.table[{0}] = BigRational(1, 2);
  w.table[{1}] = BigRational(3, 2);
  CHECK(expectation(report, w) == BigRational(1));

  WeightSpec incomplete;
  incomplete.kind = WeightSpec::Kind::UserTable;
  incomplete.table[{0}] = BigRational(1);
  CHECK_THROWS_WITH_AS(expectation(report, incomplete),
                       doctest::Contains("no value"), InputError);
}
