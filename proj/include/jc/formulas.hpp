#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "jc/hessenberg.hpp"
#include "jc/partitions.hpp"
#include "jc/qexact.hpp"

namespace jc {

/// value = q^q_pow * (q-1)^qm1_pow * residual, with residual prime to q and q-1.
struct FactorView {
  int q_pow = 0;
  int qm1_pow = 0;
  IntLaurent residual;

  IntLaurent expand() const;
  std::string str() const;
};
FactorView factor_view(const IntLaurent& p);

struct CountReport {
  IntLaurent value;
  std::string route;
  FactorView factors;

  CountReport() = default;
  CountReport(IntLaurent v, std::string r);
  nlohmann::json to_json(const Partition& mu, const std::string& lambda_or_h) const;
};

// |Z_G(I + J_mu)| in GL_n(F_q)
IntLaurent centralizer_order(const Partition& mu);
// |GL_n(F_q)|
IntLaurent gl_order(int n);
// |u_lambda| and |u_h|
IntLaurent u_lambda_order(const Partition& lambda);
IntLaurent u_h_order(const HessenbergFunction& h);

CountReport F_mu_lambda(const Partition& mu, const Composition& Lambda);
CountReport F_mu_lambda(const Partition& mu, const Partition& lambda);
CountReport F_mu_lambda_recursive(const Partition& mu, const Composition& Lambda);
IntLaurent G_star_formula(const Partition& mu, const Partition& nu, int m);

CountReport F_mu_h_tableaux(const Partition& mu, const HessenbergFunction& h);
CountReport F_mu_h_chromatic(const Partition& mu, const HessenbergFunction& h);
inline CountReport F_mu_h(const Partition& mu, const HessenbergFunction& h) {
  return F_mu_h_tableaux(mu, h);
}

// number of F_q-points of the nilpotent Hessenberg variety of (h, J_mu)
IntLaurent hess_variety_count(const HessenbergFunction& h, const Partition& mu);
// <X_{G(h)}, H~_mu>, from tableaux; checked against the symmetric-function value
QRational xh_inner_product(const HessenbergFunction& h, const Partition& mu);

IntLaurent a_nk(const Partition& lambda, int k);
IntLaurent a_nk_macdonald(const Partition& lambda, int k);
IntLaurent a_nk_explicit(const Partition& lambda, int k);
IntLaurent C_lambda(const Partition& lambda);

int chi3(long n);
IntLaurent A_n(int n);
IntLaurent B_n(int n);
IntLaurent C_n_double_sum(int n);
IntLaurent C_n_via_B(int n);
IntLaurent C_n_ekhad(int n);
IntLaurent C_n_ekhad_sum_over_Z(int n);
IntLaurent C_n_closed(int n);

// polynomials in w; entry i is the coefficient of w^i
using WPoly = std::vector<QRational>;
WPoly hermite(int n);
WPoly chebyshev_T(int k);
WPoly chebyshev_T(const Partition& rho);
WPoly wpoly_add(const WPoly& a, const WPoly& b);
WPoly wpoly_mul(const WPoly& a, const WPoly& b);
WPoly wpoly_scale(const WPoly& a, const QRational& c);
WPoly wpoly_substitute_inverse(const WPoly& a);
bool wpoly_equal(const WPoly& a, const WPoly& b);
std::string wpoly_str(const WPoly& a);
WPoly kirillov_lhs(const Partition& lambda);
WPoly kirillov_rhs(const Partition& lambda);
bool kirillov_identity_check(const Partition& lambda);

// mu = (k+1, 1^{n-k-1})
IntLaurent hook_F(const Partition& lambda, int k);
IntLaurent yip_F(int n, int k);
// lambda = (2^l), mu = (k+1, 1^{2l-k-1})
IntLaurent two_rows_hook_F(int l, int k);

IntLaurent double_coset_count(const HessenbergFunction& h1, const HessenbergFunction& h2);
IntLaurent induced_char_value(const HessenbergFunction& h, const Partition& mu);
IntLaurent fuchs_kirillov_R(const Partition& mu, const Partition& lambda);

}  // namespace jc
