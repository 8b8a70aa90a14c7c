#include <doctest.h>

#include "jc/fforacle.hpp"

using namespace jc;

namespace {

Int total(const Tally& t) {
  Int s = 0;
  for (const auto& [mu, c] : t) s += c;
  return s;
}

Int ipow(long b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

TEST_CASE("matrices over F_p") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(9));
  MatrixFp a(3, 2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(1, 0, 2);
  a.set(1, 1, 1);
  // det = 1 - 4 = 0 mod 3
  CHECK(rank(a) == 1);
  CHECK_FALSE(is_invertible(a));
  a.set(1, 1, -1);
  MatrixFp inv(3, 2, 2);
  REQUIRE(inverse(a, &inv));
  CHECK(a * inv == MatrixFp::identity(3, 2));
}

TEST_CASE("Jordan types") {
  for (int p : {2, 3, 5})
    for (int n = 1; n <= 6; ++n)
      for (const auto& mu : partitions_of(n)) CHECK(jordan_type(MatrixFp::jordan(p, mu)).partition == mu);
  CHECK_THROWS_AS(jordan_type(MatrixFp::identity(2, 3)), NotNilpotent);
}

TEST_CASE("ideal tallies") {
  Tally t = tally_ideal(HessenbergFunction{1, 2, 3}, 2);
  CHECK(t.at(Partition{1, 1, 1}) == 1);
  CHECK(t.at(Partition{2, 1}) == 5);
  CHECK(t.at(Partition{3}) == 2);
  Tally z = tally_ideal(HessenbergFunction{3, 3, 3}, 5);
  CHECK(z.size() == 1);
  CHECK(z.at(Partition{1, 1, 1}) == 1);
  for (int p : {2, 3})
    for (int n = 1; n <= 4; ++n)
      for (const auto& h : enumerate_hessenberg(n)) CHECK(total(tally_ideal(h, p)) == ipow(p, h.free_entries()));
}

TEST_CASE("budgets refuse large enumerations") {
  Budget small;
  small.max_free = 2;
  CHECK_THROWS_AS(tally_ideal(HessenbergFunction{1, 2, 3}, 2, small), BudgetExceeded);
  try {
    tally_ideal(HessenbergFunction{1, 2, 3, 4, 5, 6}, 3);
    FAIL("expected a refusal");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == ipow(3, 15));
  }
  Budget tiny;
  tiny.max_group_order = 10;
  CHECK_THROWS_AS(centralizer_order_brute(Partition{1, 1, 1}, 2, tiny), BudgetExceeded);
}

TEST_CASE("flags and double cosets") {
  // [n]_2! complete flags
  CHECK(flag_count_brute(3, 2) == 21);
  CHECK(flag_count_brute(4, 2) == 315);
  // Bruhat: |B \ G / B| = n!
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i) v.push_back(i);
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    CHECK(double_coset_count_brute(HessenbergFunction(v), HessenbergFunction(v), 2) == f);
  }
  CHECK(double_coset_count_brute(HessenbergFunction{1, 2}, HessenbergFunction{1, 2}, 2) == 2);
  // trivial group on the left: |GL_3(F_3)| / |U_3| = 11232 / 27
  CHECK(double_coset_count_brute(HessenbergFunction{3, 3, 3}, HessenbergFunction{1, 2, 3}, 3) == 416);
}

TEST_CASE("rank profiles are complete") {
  for (int n1 = 1; n1 <= 3; ++n1)
    for (int m = 1; m <= 2; ++m) {
      Int sum = 0;
      for (int r = 0; r <= std::min(n1, m); ++r) {
        auto res = rank_profile_count({n1}, {r}, m, 2);
        CHECK(res.formula.eval_int(2) == res.brute);
        sum += res.brute;
      }
      CHECK(sum == ipow(2, n1 * m));
    }
}

TEST_CASE("square-zero counts") {
  // strictly upper triangular 2x2 over F_p: X^2 = 0 always
  auto c = count_x2_brute(Partition{1, 1}, 3);
  CHECK(c.at(0) == 1);
  CHECK(c.at(1) == 2);
  // admissible tallies partition the whole space
  for (int m = 1; m <= 2; ++m) {
    Tally t = admissible_tally(Partition{2, 1}, m, 2);
    CHECK(total(t) == ipow(2, 3 * m));
  }
}
