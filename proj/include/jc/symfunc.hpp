#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "jc/hessenberg.hpp"
#include "jc/partitions.hpp"
#include "jc/qexact.hpp"

namespace jc {

enum class Basis { M, E, H, P, S };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

/// Homogeneous symmetric polynomial of degree n in n variables, stored as
/// coefficients on one basis indexed by partitions of n.
class SymPoly {
 public:
  SymPoly(int degree, Basis basis) : degree_(degree), basis_(basis) {}
  static SymPoly element(Basis basis, const Partition& lambda, const QRational& c = 1);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, QRational>& terms() const { return terms_; }
  QRational coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const QRational& c);
  bool is_zero() const { return terms_.empty(); }

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const QRational& c);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const QRational& c) { return a *= c; }
  friend bool operator==(const SymPoly& a, const SymPoly& b) {
    return a.degree_ == b.degree_ && a.basis_ == b.basis_ && a.terms_ == b.terms_;
  }

  SymPoly substitute_inverse() const;
  nlohmann::json to_json() const;

 private:
  int degree_;
  Basis basis_;
  std::map<Partition, QRational> terms_;
};

// Coefficient of m_mu in the basis element b_lambda (b = M, E, H, P or S).
Rat transition_coeff(Basis b, const Partition& lambda, const Partition& mu);

SymPoly convert(const SymPoly& f, Basis target);
QRational hall_inner(const SymPoly& f, const SymPoly& g);
// product, returned on the monomial basis
SymPoly multiply(const SymPoly& f, const SymPoly& g);
// the involution: E <-> H relabelling, sign rule on P; M and S go through E
SymPoly omega(const SymPoly& f);

// m_nu * m_rho = sum_lambda f^lambda_{nu rho}(1) m_lambda
std::map<Partition, Int> hall_f1(const Partition& nu, const Partition& rho);

SymPoly chromatic_qsf(const HessenbergFunction& h);
std::map<Partition, IntLaurent> chromatic_e_coeffs(const HessenbergFunction& h);

// P_mu(x; q, 0) on the monomial basis; with at_inverse the coefficients are taken at 1/q
SymPoly macdonald_P0(const Partition& mu, bool at_inverse = false);
// b_mu(q, 0) = prod_j 1/(q;q)_{mu_j - mu_{j+1}}
QRational b_mu_q0(const Partition& mu);
SymPoly macdonald_Q0(const Partition& mu, bool at_inverse = false);
// modified Hall-Littlewood function, on the H basis
SymPoly modified_HL(const Partition& mu);
// <H~_mu, sum_lambda c_lambda e_lambda> without building H~_mu
QRational modified_HL_inner_e(const Partition& mu, const std::map<Partition, IntLaurent>& c);
SymPoly g_row(int l);
SymPoly jing_jozefiak_Q(int n, int k);

// Bivariate polynomial in y1, y2: (a, b) -> coefficient of y1^a y2^b
using Bivariate = std::map<std::pair<int, int>, IntLaurent>;
Bivariate two_var_P(int n, int k);
// evaluate a monomial-basis SymPoly at two variables
Bivariate restrict_to_two_vars(const SymPoly& f);

}  // namespace jc
