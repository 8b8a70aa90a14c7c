#include <doctest.h>

#include <algorithm>

#include "jc/hessenberg.hpp"

using namespace jc;

namespace {

// Greene's theorem: the largest union of k chains of i < j (h(i) < j) equals the
// largest subset containing no antichain of size k + 1.
Partition gk_oracle(const HessenbergFunction& h) {
  const int n = h.n();
  const unsigned full = 1u << n;
  std::vector<int> width(full, 0);
  for (unsigned s = 1; s < full; ++s) {
    // width(s) = max antichain inside s
    int best = 0;
    for (unsigned t = s;; t = (t - 1) & s) {
      bool anti = true;
      for (int i = 0; i < n && anti; ++i)
        for (int j = i + 1; j < n && anti; ++j)
          if ((t >> i & 1) && (t >> j & 1) && h.precedes(i + 1, j + 1)) anti = false;
      if (anti) best = std::max(best, __builtin_popcount(t));
      if (t == 0) break;
    }
    width[s] = best;
  }
  std::vector<int> sums{0};
  for (int k = 1; k <= n; ++k) {
    int best = 0;
    for (unsigned s = 0; s < full; ++s)
      if (width[s] <= k) best = std::max(best, __builtin_popcount(s));
    sums.push_back(best);
  }
  std::vector<int> parts;
  for (int k = 1; k <= n; ++k)
    if (sums[size_t(k)] > sums[size_t(k - 1)]) parts.push_back(sums[size_t(k)] - sums[size_t(k - 1)]);
  return Partition(parts);
}

long catalan(int n) {
  long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("Hessenberg functions are counted by Catalan numbers") {
  for (int n = 1; n <= 8; ++n) CHECK(long(enumerate_hessenberg(n).size()) == catalan(n));
  CHECK_THROWS(HessenbergFunction({2, 1}));
  CHECK_THROWS(HessenbergFunction({1, 3}));
  CHECK_THROWS(HessenbergFunction({2, 2, 2}));
}

TEST_CASE("statistics") {
  HessenbergFunction h{1, 3, 5, 6, 7, 7, 7};
  CHECK(h.weight() == 36);
  CHECK(h.edge_count() == int(indifference_edges(h).size()));
  CHECK(h.free_entries() == 49 - 36);
  CHECK(h.str() == "(1,3,5,6,7,7,7)");
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : enumerate_hessenberg(n)) {
      CHECK(conjugate_h(conjugate_h(g)) == g);
      CHECK(g.edge_count() == g.weight() - n * (n + 1) / 2);
    }
}

TEST_CASE("block Hessenberg functions of compositions") {
  CHECK(from_composition(Composition{{2, 1}}) == HessenbergFunction{2, 2, 3});
  CHECK(from_composition(Partition{1, 1, 1}) == HessenbergFunction{1, 2, 3});
  CHECK(from_composition(Partition{3}) == HessenbergFunction{3, 3, 3});
}

TEST_CASE("Greene-Kleitman partition against the chain oracle") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& h : enumerate_hessenberg(n)) CHECK(greene_kleitman(h) == gk_oracle(h));
  CHECK(greene_kleitman(HessenbergFunction{1, 2, 3, 4}) == Partition{4});
  CHECK(greene_kleitman(HessenbergFunction{4, 4, 4, 4}) == Partition{1, 1, 1, 1});
}

TEST_CASE("compatible triples") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_compatible_triples(n)) {
      CHECK(t.h1.weight() == t.h0.weight() + 1);
      CHECK(t.h2.weight() == t.h1.weight() + 1);
      for (int i = 1; i <= n; ++i) {
        CHECK(t.h0(i) <= t.h1(i));
        CHECK(t.h1(i) <= t.h2(i));
      }
    }
  CHECK_FALSE(enumerate_compatible_triples(3).empty());
}
