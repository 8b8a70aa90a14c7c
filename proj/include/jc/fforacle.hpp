#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "jc/hessenberg.hpp"
#include "jc/partitions.hpp"

namespace jc {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, Int required)
      : std::runtime_error(what), required_(std::move(required)) {}
  const Int& required() const { return required_; }

 private:
  Int required_;
};

class NotNilpotent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense matrix over F_p, row-major, entries in [0, p).
class MatrixFp {
 public:
  MatrixFp(int p, int rows, int cols);
  static MatrixFp identity(int p, int n);
  // Nilpotent upper triangular Jordan matrix with blocks mu_1, mu_2, ... down the diagonal.
  static MatrixFp jordan(int p, const Partition& mu);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return a_[size_t(i * cols_ + j)]; }
  void set(int i, int j, long v);
  const std::vector<int>& data() const { return a_; }

  friend MatrixFp operator*(const MatrixFp& a, const MatrixFp& b);
  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  int p_, rows_, cols_;
  std::vector<int> a_;
};

bool is_prime(long p);
int rank(const MatrixFp& m);
// rank of the leading `rows` x `cols` block
int rank_of_block(const MatrixFp& m, int rows, int cols);
bool is_invertible(const MatrixFp& m);
// Gauss-Jordan inverse; false when m is singular
bool inverse(const MatrixFp& m, MatrixFp* out);

struct JordanType {
  Partition partition;
};
JordanType jordan_type(const MatrixFp& X, bool require_nilpotent = true);

/// Enumeration limits. max_free < 0 selects the default for p: 16 entries at
/// p = 2, 12 at p = 3, and the same total count (3^12) for larger p.
struct Budget {
  int max_free = -1;
  long max_group_order = 1000000;
  int threads = 1;

  int free_limit(int p) const;
};

using Tally = std::map<Partition, Int>;

Tally tally_ideal(const HessenbergFunction& h, int p, const Budget& budget = {});

struct RankProfileResult {
  IntLaurent formula;
  Int brute;
};
// n_seq = (n_1 >= ... >= n_l > 0), r_seq = (r_1 >= ... >= r_l >= 0); matrices are n_1 x m.
IntLaurent rank_profile_formula(const std::vector<int>& n_seq, const std::vector<int>& r_seq, int m);
RankProfileResult rank_profile_count(const std::vector<int>& n_seq, const std::vector<int>& r_seq,
                                     int m, int p, const Budget& budget = {});

std::vector<Partition> eligible_partitions(const Partition& nu, int m);
// per-type tally of Z in F_p^{|nu| x m} with [[J_nu, Z], [0, 0]] of that type
Tally admissible_tally(const Partition& nu, int m, int p, const Budget& budget = {});
Int admissible_count_brute(const Partition& mu, const Partition& nu, int m, int p,
                           const Budget& budget = {});

// complete flags V_1 ⊂ ... ⊂ V_n of F_p^n with J_mu V_i ⊆ V_{e(i)}
Int hess_variety_count_brute(const HessenbergFunction& h, const Partition& mu, int p,
                             const Budget& budget = {});
// number of complete flags of F_p^n
Int flag_count_brute(int n, int p);

// |U_{h1} \ GL_n(F_p) / U_{h2}|
Int double_coset_count_brute(const HessenbergFunction& h1, const HessenbergFunction& h2, int p,
                             const Budget& budget = {});

// rank k -> number of X in u_lambda with X^2 = 0
std::map<int, Int> count_x2_brute(const Partition& lambda, int p, const Budget& budget = {});

// |Z(I + J_mu)| in GL_n(F_p) by scanning the group
Int centralizer_order_brute(const Partition& mu, int p, const Budget& budget = {});
// #{g in GL_n(F_p) : g^{-1}(I + J_mu) g in U_h} / |U_h|
Int induced_char_brute(const HessenbergFunction& h, const Partition& mu, int p,
                       const Budget& budget = {});

}  // namespace jc
