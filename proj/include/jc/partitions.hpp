#pragma once

#include <compare>
#include <string>
#include <vector>

#include <json.hpp>

#include "jc/qexact.hpp"

namespace jc {

/// Weakly decreasing list of positive integers. Parts beyond the length are 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // (a^k)
  static Partition rectangle(int a, int k);
  // (k+1, 1^{n-k-1})
  static Partition hook(int n, int k);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return int(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }
  // zero-based; 0 past the end
  int operator[](int i) const { return i < length() && i >= 0 ? parts_[size_t(i)] : 0; }
  // number of parts equal to i
  int multiplicity(int i) const;

  std::string str() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Composition {
  std::vector<int> parts;

  int size() const;
  int length() const { return int(parts.size()); }
  Partition sorted() const;
  std::string str() const;
  friend bool operator==(const Composition&, const Composition&) = default;
};

using StripChain = std::vector<Partition>;

Partition conjugate(const Partition& mu);
// mu ⊴ nu in dominance order; sizes must agree
bool dominates(const Partition& mu, const Partition& nu);
int n_stat(const Partition& mu);
bool contains(const Partition& outer, const Partition& inner);

// All partitions of n, in reverse lexicographic order: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
// partitions of n with parts <= max_part
std::vector<Partition> partitions_of(int n, int max_part);
// All compositions of n
std::vector<Composition> compositions_of(int n);
// All distinct rearrangements of the parts of lambda
std::vector<Composition> rearrangements(const Partition& lambda);

bool is_horizontal_strip(const Partition& eta, const Partition& rho);
IntLaurent theta(const Partition& eta, const Partition& rho);
IntLaurent psi(const Partition& eta, const Partition& rho);

// Chains ∅ = mu^0 ⊆ ... ⊆ mu^s = mu with mu^j/mu^{j-1} a horizontal content_j strip.
std::vector<StripChain> strip_chains(const Partition& mu, const std::vector<int>& content);
inline std::vector<StripChain> strip_chains(const Partition& mu, const Partition& lambda) {
  return strip_chains(mu, lambda.parts());
}

IntLaurent coeff_b(const Partition& mu, const Partition& lambda);
IntLaurent coeff_a(const Partition& mu, const Partition& lambda);

// Number of SSYT of the given shape and content, counted via strip chains.
long kostka(const Partition& shape, const std::vector<int>& content);
inline long kostka(const Partition& shape, const Partition& content) {
  return kostka(shape, content.parts());
}

// [lambda]_q! = prod_i [lambda_i]_q!
IntLaurent q_factorial(const Partition& lambda);
// z_rho = prod_i i^{m_i} m_i!
Int z_rho(const Partition& rho);

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);
// "3,2,2" or "(3,2,2)" or "[3,2,2]"; empty string gives the empty partition
std::vector<int> parse_int_list(const std::string& s);

}  // namespace jc
