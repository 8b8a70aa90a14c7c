#include <doctest.h>

#include "jc/formulas.hpp"
#include "jc/tableaux.hpp"

using namespace jc;

namespace {

Int hook_length_count(const Partition& lam) {
  const Partition c = conjugate(lam);
  Int prod = 1;
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) prod *= (lam[i] - j - 1) + (c[j] - i - 1) + 1;
  return factorial(lam.size()) / prod;
}

}  // namespace

TEST_CASE("standard tableaux: hook length formula and sum of squares") {
  for (int n = 1; n <= 7; ++n) {
    Int squares = 0;
    for (const auto& lam : partitions_of(n)) {
      auto tabs = enumerate_syt(lam);
      CHECK(Int(long(tabs.size())) == hook_length_count(lam));
      for (const auto& t : tabs) {
        CHECK(t.is_valid());
        CHECK(t.shape() == lam);
      }
      squares += Int(long(tabs.size())) * long(tabs.size());
    }
    CHECK(squares == factorial(n));
  }
}

TEST_CASE("semistandard tableaux are valid and have the requested content") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& content : compositions_of(n))
        for (const auto& t : enumerate_ssyt(shape, content.parts)) {
          CHECK(t.is_valid());
          CHECK(t.shape() == shape);
          CHECK(t.content() == content.parts);
        }
  SemiStandardTableau bad{{{1, 1}, {1}}};
  CHECK_FALSE(bad.is_valid());
  StandardTableau bad2{{{1, 3}, {2, 4}, {5}}};
  CHECK(bad2.is_valid());
  StandardTableau bad3{{{2, 1}}};
  CHECK_FALSE(bad3.is_valid());
}

TEST_CASE("tableau weights reproduce the strip-chain coefficient") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& shape : partitions_of(n))
      for (const auto& content : partitions_of(n))
        CHECK(b_via_tableaux(shape, content) == coeff_b(shape, content));
}

TEST_CASE("underline_F: polynomial with nonnegative coefficients") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n))
      for (const auto& mu : partitions_of(n)) {
        IntLaurent f = underline_F(mu, h);
        CHECK(f.is_polynomial());
        for (const auto& [e, c] : f.terms()) CHECK(c > 0);
        IntLaurent sum;
        for (const auto& t : enumerate_syt_h(mu, h)) sum += underline_F_term(t, h);
        CHECK(sum == f);
      }
}

TEST_CASE("tableau json") {
  StandardTableau t{{{1, 2}, {3}}};
  CHECK(to_json(t).dump() == "[[1,2],[3]]");
}
