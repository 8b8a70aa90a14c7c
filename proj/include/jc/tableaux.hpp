#pragma once

#include <vector>

#include <json.hpp>

#include "jc/hessenberg.hpp"
#include "jc/partitions.hpp"

namespace jc {

// Rows of a Young diagram in English notation, top row first.
struct SemiStandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  // content[i-1] = number of entries equal to i
  std::vector<int> content() const;
  bool is_valid() const;
  friend bool operator==(const SemiStandardTableau&, const SemiStandardTableau&) = default;
};

struct StandardTableau {
  std::vector<std::vector<int>> rows;

  Partition shape() const;
  bool is_valid() const;
  friend bool operator==(const StandardTableau&, const StandardTableau&) = default;
};

std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& shape,
                                                const std::vector<int>& content);
std::vector<StandardTableau> enumerate_syt(const Partition& shape);

IntLaurent s_weight(const SemiStandardTableau& T);
IntLaurent r_weight(const SemiStandardTableau& T);
// sum of s_q(T) r_q(T) over SSYT(shape, content)
IntLaurent b_via_tableaux(const Partition& shape, const Partition& content);

std::vector<StandardTableau> enumerate_syt_h(const Partition& mu, const HessenbergFunction& h);
// q^{gamma(T)} prod_{coleg(b) >= 1} [arm_h(up(b), T(b)) + 1]_q for one tableau
IntLaurent underline_F_term(const StandardTableau& T, const HessenbergFunction& h);
IntLaurent underline_F(const Partition& mu, const HessenbergFunction& h);

nlohmann::json to_json(const SemiStandardTableau& T);
nlohmann::json to_json(const StandardTableau& T);

}  // namespace jc
