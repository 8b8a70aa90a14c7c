#include <doctest.h>

#include <algorithm>
#include <functional>

#include "jc/partitions.hpp"
#include "jc/tableaux.hpp"

using namespace jc;

namespace {

// p(n) by the usual parts-at-most-k recursion
long partition_count(int n, int k) {
  if (n == 0) return 1;
  if (k == 0) return 0;
  return partition_count(n, k - 1) + (n >= k ? partition_count(n - k, k) : 0);
}

// 0-1 matrices with row sums r and column sums c
long zero_one_matrices(const std::vector<int>& r, std::vector<int> c) {
  std::function<long(size_t)> rec = [&](size_t row) -> long {
    if (row == r.size()) return std::all_of(c.begin(), c.end(), [](int x) { return x == 0; }) ? 1 : 0;
    long total = 0;
    std::function<void(size_t, int)> pick = [&](size_t col, int left) {
      if (left == 0) {
        total += rec(row + 1);
        return;
      }
      for (size_t j = col; j < c.size(); ++j)
        if (c[j] > 0) {
          --c[j];
          pick(j + 1, left - 1);
          ++c[j];
        }
    };
    pick(0, r[row]);
    return total;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("partition enumeration") {
  for (int n = 0; n <= 12; ++n) CHECK(long(partitions_of(n).size()) == partition_count(n, n));
  auto seven = partitions_of(7);
  CHECK(seven.front() == Partition{7});
  CHECK(seven[1] == Partition{6, 1});
  CHECK(seven.back() == Partition(std::vector<int>(7, 1)));
  CHECK(std::is_sorted(seven.rbegin(), seven.rend()));
  CHECK(partitions_of(8, 4).size() == 15);
  for (int n = 1; n <= 8; ++n) CHECK(compositions_of(n).size() == size_t(1) << (n - 1));
  CHECK(rearrangements(Partition{2, 1, 1}).size() == 3);
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, 0, 1}));
}

TEST_CASE("conjugation and dominance") {
  for (int n = 1; n <= 9; ++n)
    for (const auto& mu : partitions_of(n)) {
      const Partition c = conjugate(mu);
      CHECK(conjugate(c) == mu);
      CHECK(c.size() == n);
      CHECK(c.length() == mu[0]);
      long nstat = 0;
      for (int j = 0; j < c.length(); ++j) nstat += long(c[j]) * (c[j] - 1) / 2;
      CHECK(n_stat(mu) == nstat);
      for (const auto& nu : partitions_of(n)) CHECK(dominates(mu, nu) == dominates(conjugate(nu), c));
    }
  CHECK(dominates(Partition{2, 2}, Partition{3, 1}));
  CHECK_FALSE((dominates(Partition{3, 3}, Partition{4, 1, 1}) && dominates(Partition{4, 1, 1}, Partition{3, 3})));
}

TEST_CASE("Kostka numbers match direct tableau enumeration") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& content : partitions_of(n)) {
        long k = kostka(shape, content);
        CHECK(k == long(enumerate_ssyt(shape, content.parts()).size()));
        CHECK((k > 0) == dominates(content, shape));
      }
  CHECK(kostka(Partition{3, 2}, std::vector<int>{2, 1, 2}) == kostka(Partition{3, 2}, Partition{2, 2, 1}));
}

TEST_CASE("q-Whittaker coefficients at q = 0 and q = 1") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n))
      for (const auto& lam : partitions_of(n)) {
        IntLaurent a = coeff_a(mu, lam);
        CHECK(a.is_polynomial());
        CHECK(a.eval_int(0) == kostka(mu, lam));
        CHECK(a.eval_int(1) == zero_one_matrices(conjugate(mu).parts(), lam.parts()));
        CHECK(coeff_b(mu, lam).is_polynomial());
      }
}

TEST_CASE("z_rho sums") {
  for (int n = 1; n <= 8; ++n) {
    Rat s = 0;
    for (const auto& rho : partitions_of(n)) s += Rat(1) / Rat(z_rho(rho));
    CHECK(s == 1);
  }
  CHECK(z_rho(Partition{2, 2, 1}) == 8);
}

TEST_CASE("parsing and json") {
  CHECK(parse_int_list("3,2,2") == std::vector<int>{3, 2, 2});
  CHECK(parse_int_list("(3, 2,2)") == std::vector<int>{3, 2, 2});
  CHECK(parse_int_list("[1]") == std::vector<int>{1});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS(parse_int_list("3,x"));
  Partition mu{4, 2, 2, 1};
  CHECK(partition_from_json(to_json(mu)) == mu);
  CHECK(mu.str() == "(4,2,2,1)");
  CHECK(Partition::hook(5, 2) == Partition{3, 1, 1});
  CHECK(Partition::rectangle(2, 3) == Partition{2, 2, 2});
}
