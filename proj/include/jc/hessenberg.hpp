#pragma once

#include <string>
#include <utility>
#include <vector>

#include "jc/partitions.hpp"

namespace jc {

/// Nondecreasing h : [n] -> [n] with h(i) >= i. Indices are 1-based in the
/// accessors; h(0) reads as 0.
class HessenbergFunction {
 public:
  HessenbergFunction() = default;
  HessenbergFunction(std::initializer_list<int> values);
  explicit HessenbergFunction(std::vector<int> values);

  int n() const { return int(v_.size()); }
  int operator()(int i) const { return i <= 0 ? 0 : v_[size_t(i - 1)]; }
  const std::vector<int>& values() const { return v_; }
  // |h| = sum h(i)
  int weight() const;
  // E_h = sum (h(i) - i)
  int edge_count() const;
  // number of free entries of u_h: sum (n - h(i))
  int free_entries() const;
  // i ≺_h j  iff  h(i) < j
  bool precedes(int i, int j) const { return (*this)(i) < j; }

  std::string str() const;
  friend auto operator<=>(const HessenbergFunction&, const HessenbergFunction&) = default;

 private:
  std::vector<int> v_;
};

enum class TripleCase { I, II };

struct CompatibleTriple {
  HessenbergFunction h0, h1, h2;
  int pivot = 0;
  TripleCase which = TripleCase::I;
};

HessenbergFunction from_composition(const Composition& Lambda);
inline HessenbergFunction from_composition(const Partition& lambda) {
  return from_composition(Composition{lambda.parts()});
}
std::vector<std::pair<int, int>> indifference_edges(const HessenbergFunction& h);
bool precedes(const HessenbergFunction& h, int i, int j);
Partition greene_kleitman(const HessenbergFunction& h);
HessenbergFunction conjugate_h(const HessenbergFunction& h);
std::vector<int> e_function(const HessenbergFunction& h);
std::vector<HessenbergFunction> enumerate_hessenberg(int n);
std::vector<CompatibleTriple> enumerate_compatible_triples(int n);

}  // namespace jc
