#include "jc/hessenberg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace jc {

HessenbergFunction::HessenbergFunction(std::initializer_list<int> values)
    : HessenbergFunction(std::vector<int>(values)) {}

HessenbergFunction::HessenbergFunction(std::vector<int> values) : v_(std::move(values)) {
  const int n = int(v_.size());
  for (int i = 1; i <= n; ++i) {
    int hi = v_[size_t(i - 1)];
    if (hi < i || hi > n) throw std::invalid_argument("Hessenberg function needs i <= h(i) <= n");
    if (i > 1 && hi < v_[size_t(i - 2)])
      throw std::invalid_argument("Hessenberg function must be nondecreasing");
  }
}

int HessenbergFunction::weight() const { return std::accumulate(v_.begin(), v_.end(), 0); }

int HessenbergFunction::edge_count() const { return weight() - n() * (n() + 1) / 2; }

int HessenbergFunction::free_entries() const { return n() * n() - weight(); }

std::string HessenbergFunction::str() const {
  std::string s = "(";
  for (size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

HessenbergFunction from_composition(const Composition& Lambda) {
  std::vector<int> v;
  int end = 0;
  for (int part : Lambda.parts) {
    if (part <= 0) throw std::invalid_argument("composition parts must be positive");
    end += part;
    for (int k = 0; k < part; ++k) v.push_back(end);
  }
  return HessenbergFunction(v);
}

std::vector<std::pair<int, int>> indifference_edges(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= h.n(); ++i)
    for (int j = i + 1; j <= h(i); ++j) e.emplace_back(i, j);
  return e;
}

bool precedes(const HessenbergFunction& h, int i, int j) { return h.precedes(i, j); }

Partition greene_kleitman(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<bool> used(size_t(n + 1), false);
  std::vector<int> sizes;
  int placed = 0;
  while (placed < n) {
    int cur = 1;
    while (used[size_t(cur)]) ++cur;
    int len = 0;
    while (true) {
      used[size_t(cur)] = true;
      ++placed;
      ++len;
      int next = 0;
      for (int j = 1; j <= n; ++j)
        if (!used[size_t(j)] && h.precedes(cur, j)) {
          next = j;
          break;
        }
      if (!next) break;
      cur = next;
    }
    sizes.push_back(len);
  }
  std::sort(sizes.rbegin(), sizes.rend());
  return Partition(sizes);
}

HessenbergFunction conjugate_h(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<int> v;
  for (int i = 1; i <= n; ++i) {
    int c = 0;
    for (int j = 1; j <= n; ++j)
      if (h(j) >= n + 1 - i) ++c;
    v.push_back(c);
  }
  return HessenbergFunction(v);
}

std::vector<int> e_function(const HessenbergFunction& h) {
  const int n = h.n();
  HessenbergFunction hc = conjugate_h(h);
  std::vector<int> e;
  for (int i = 1; i <= n; ++i) e.push_back(n - hc(n + 1 - i));
  return e;
}

std::vector<HessenbergFunction> enumerate_hessenberg(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    int lo = std::max(i, cur.empty() ? 1 : cur.back());
    for (int v = lo; v <= n; ++v) {
      cur.push_back(v);
      rec(i + 1);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(1);
  return out;
}

std::vector<CompatibleTriple> enumerate_compatible_triples(int n) {
  std::vector<CompatibleTriple> out;
  for (const auto& h1 : enumerate_hessenberg(n)) {
    for (int i = 1; i <= n - 1; ++i) {
      const int hi = h1(i);
      if (h1(i - 1) < hi && hi < h1(i + 1) && hi + 1 <= n && h1(hi) == h1(hi + 1)) {
        std::vector<int> v0 = h1.values(), v2 = h1.values();
        v0[size_t(i - 1)] = hi - 1;
        v2[size_t(i - 1)] = hi + 1;
        out.push_back({HessenbergFunction(v0), h1, HessenbergFunction(v2), i, TripleCase::I});
      }
      bool hit = false;
      for (int l = 1; l <= n; ++l) hit = hit || h1(l) == i;
      if (h1(i + 1) == hi + 1 && !hit) {
        std::vector<int> v0 = h1.values(), v2 = h1.values();
        v0[size_t(i)] = hi;
        v2[size_t(i - 1)] = hi + 1;
        out.push_back({HessenbergFunction(v0), h1, HessenbergFunction(v2), i, TripleCase::II});
      }
    }
  }
  return out;
}

}  // namespace jc
