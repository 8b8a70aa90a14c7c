#pragma once

#include <utility>
#include <vector>

#include "jc/partitions.hpp"
#include "jc/qexact.hpp"

namespace jc::testdata {

// ascending coefficients
inline IntLaurent P(std::vector<long> c) { return IntLaurent::from_coeffs(c); }
inline IntLaurent Q(int e) { return IntLaurent::q_pow(e); }
inline IntLaurent QM1(int k) { return q_minus_one_pow(k); }
inline IntLaurent QP1(int k) { return P({1, 1}).pow(unsigned(k)); }

using Row = std::pair<Partition, IntLaurent>;

// h = (1,3,5,6,7,7,7), all mu |- 7
inline std::vector<Row> table_one() {
  return {
      {{7}, 0},
      {{6, 1}, 0},
      {{5, 2}, 0},
      {{5, 1, 1}, 0},
      {{4, 3}, 0},
      {{4, 2, 1}, QM1(4) * Q(9)},
      {{4, 1, 1, 1}, QM1(3) * Q(9)},
      {{3, 3, 1}, QM1(4) * Q(8)},
      {{3, 2, 2}, QP1(2) * QM1(4) * Q(6)},
      {{3, 2, 1, 1}, P({1, 4, 5, 1}) * QP1(1) * QM1(3) * Q(5)},
      {{3, 1, 1, 1, 1}, QP1(3) * QM1(2) * Q(5)},
      {{2, 2, 2, 1}, P({1, 4, 7, 6, 1}) * QM1(3) * Q(3)},
      {{2, 2, 1, 1, 1}, P({1, 3, 7, 10, 10, 5, 1}) * QM1(2) * Q(1)},
      {{2, 1, 1, 1, 1, 1}, P({1, 2, 3, 4, 2, 1}) * QM1(1)},
      {{1, 1, 1, 1, 1, 1, 1}, 1},
  };
}

// lambda = (2,2,2,2), mu |- 8 with mu_1 <= 4
inline std::vector<Row> table_two() {
  return {
      {{4, 4}, QM1(6) * Q(15) * QP1(3)},
      {{4, 3, 1}, QM1(5) * Q(13) * QP1(4) * P({1, 3})},
      {{4, 2, 2}, QM1(5) * Q(12) * QP1(4) * P({1, 2})},
      {{4, 2, 1, 1}, QM1(4) * Q(11) * QP1(4) * P({1, 2, 3})},
      {{4, 1, 1, 1, 1}, QM1(3) * Q(11) * QP1(4)},
      {{3, 3, 2}, QM1(5) * Q(10) * QP1(4) * P({1, 2, 3})},
      {{3, 3, 1, 1}, QM1(4) * Q(10) * QP1(2) * P({1, 3, 9, 9, 6})},
      {{3, 2, 2, 1}, QM1(4) * Q(7) * QP1(4) * P({1, 2, 7, 7, 7})},
      {{3, 2, 1, 1, 1}, QM1(3) * Q(6) * QP1(3) * P({1, 2, 6, 10, 9, 8})},
      {{3, 1, 1, 1, 1, 1}, QM1(2) * Q(6) * QP1(3) * P({1, 0, 3})},
      {{2, 2, 2, 2}, QM1(4) * Q(6) * QP1(2) * P({1, 1, 3}) * P({1, 1, 1})},
      {{2, 2, 2, 1, 1}, QM1(3) * Q(3) * QP1(3) * P({1, 1, 5, 5, 10, 6, 6})},
      {{2, 2, 1, 1, 1, 1}, QM1(2) * Q(1) * QP1(1) * P({1, 2, 5, 8, 14, 15, 16, 11, 6})},
      {{2, 1, 1, 1, 1, 1, 1}, QM1(1) * QP1(2) * P({1, 0, 2, 0, 3})},
      {{1, 1, 1, 1, 1, 1, 1, 1}, 1},
  };
}

}  // namespace jc::testdata
