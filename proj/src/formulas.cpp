#include "jc/formulas.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "jc/fforacle.hpp"
#include "jc/symfunc.hpp"
#include "jc/tableaux.hpp"

namespace jc {

namespace {

int binom2(int n) { return n * (n - 1) / 2; }

Int binom_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(n, k);
}

IntLaurent q_int_inv(int m) { return substitute_inverse(q_int(m)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

IntLaurent laurent_or_throw(const QRational& r, const std::string& where) {
  if (!r.is_laurent()) throw ArithmeticError(where + ": non-Laurent value " + r.str());
  return r.num();
}

// m_i = mu'_i - mu'_{i+1}
std::vector<int> conj_steps(const Partition& mu) {
  Partition c = conjugate(mu);
  std::vector<int> m;
  for (int i = 0; i < c.length(); ++i) m.push_back(c[i] - c[i + 1]);
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

IntLaurent FactorView::expand() const {
  return (residual * q_minus_one_pow(qm1_pow)).shifted(q_pow);
}

std::string FactorView::str() const {
  if (residual.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << " * ";
    first = false;
  };
  if (qm1_pow) {
    sep();
    os << "(q-1)";
    if (qm1_pow > 1) os << "^" << qm1_pow;
  }
  if (q_pow) {
    sep();
    os << "q";
    if (q_pow != 1) os << "^" << q_pow;
  }
  if (!(residual == IntLaurent(1)) || first) {
    sep();
    if (residual.num_terms() > 1)
      os << "(" << residual.str() << ")";
    else
      os << residual.str();
  }
  return os.str();
}

FactorView factor_view(const IntLaurent& p) {
  FactorView v;
  if (p.is_zero()) return v;
  v.q_pow = p.low();
  IntLaurent r = p.shifted(-v.q_pow);
  v.qm1_pow = root_multiplicity_at_one(r);
  v.residual = r.exact_div(q_minus_one_pow(v.qm1_pow));
  return v;
}

CountReport::CountReport(IntLaurent v, std::string r)
    : value(std::move(v)), route(std::move(r)), factors(factor_view(value)) {}

nlohmann::json CountReport::to_json(const Partition& mu, const std::string& lambda_or_h) const {
  return {{"mu", jc::to_json(mu)},
          {"lambda_or_h", lambda_or_h},
          {"route", route},
          {"poly", value.to_json()},
          {"factors",
           {{"q_pow", factors.q_pow},
            {"qm1_pow", factors.qm1_pow},
            {"residual", factors.residual.to_json()}}}};
}

// ---------------------------------------------------------------------------
// group orders

IntLaurent centralizer_order(const Partition& mu) {
  const int n = mu.size();
  const int l = mu.length();
  int e = n + 2 * n_stat(mu) - l;
  IntLaurent prod = q_minus_one_pow(l);
  IntLaurent direct = IntLaurent::q_pow(n + 2 * n_stat(mu));
  for (int m : conj_steps(mu)) {
    e -= binom2(m);
    prod *= q_factorial(m);
    IntLaurent phi(1);
    for (int j = 1; j <= m; ++j) phi *= IntLaurent(1) - IntLaurent::q_pow(-j);
    require(phi == (q_factorial(m) * q_minus_one_pow(m)).shifted(-binom2(m) - m),
            "centralizer_order: phi_m(1/q) identity fails");
    direct *= phi;
  }
  IntLaurent z = prod.shifted(e);
  require(z == direct, "centralizer_order: the two centralizer formulas disagree for " + mu.str());
  return z;
}

IntLaurent gl_order(int n) {
  IntLaurent g(1);
  for (int i = 0; i < n; ++i) g *= IntLaurent::q_pow(n) - IntLaurent::q_pow(i);
  return g;
}

IntLaurent u_lambda_order(const Partition& lambda) {
  return IntLaurent::q_pow(binom2(lambda.size()) - n_stat(conjugate(lambda)));
}

IntLaurent u_h_order(const HessenbergFunction& h) { return IntLaurent::q_pow(h.free_entries()); }

// ---------------------------------------------------------------------------
// F_{mu lambda}

namespace {

std::shared_mutex f_cache_mutex;
std::map<std::pair<Partition, Partition>, IntLaurent> f_cache;

IntLaurent F_mu_lambda_value(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw std::invalid_argument("F_mu_lambda: |mu| != |lambda|");
  auto key = std::make_pair(mu, lambda);
  {
    std::shared_lock<std::shared_mutex> lock(f_cache_mutex);
    auto it = f_cache.find(key);
    if (it != f_cache.end()) return it->second;
  }
  const int n = mu.size();
  const int l = mu.length();
  const Partition muc = conjugate(mu);
  IntLaurent f;
  if (dominates(lambda, muc)) {
    f = (substitute_inverse(coeff_b(muc, lambda)) * q_minus_one_pow(n - l))
            .shifted(binom2(n) - n_stat(mu) - (n - l));
    require(f.is_polynomial() && f.degree() == binom2(n) - n_stat(mu),
            "F_mu_lambda: unexpected degree for " + mu.str() + ", " + lambda.str());
    require(f.leading() == Int(kostka(muc, lambda)),
            "F_mu_lambda: leading coefficient is not the Kostka number");
  } else {
    require(coeff_b(muc, lambda).is_zero(), "F_mu_lambda: nonzero outside the dominance range");
  }
  std::unique_lock<std::shared_mutex> lock(f_cache_mutex);
  f_cache.emplace(key, f);
  return f;
}

}  // namespace

CountReport F_mu_lambda(const Partition& mu, const Partition& lambda) {
  return CountReport(F_mu_lambda_value(mu, lambda), "macdonald");
}

CountReport F_mu_lambda(const Partition& mu, const Composition& Lambda) {
  return F_mu_lambda(mu, Lambda.sorted());
}

IntLaurent G_star_formula(const Partition& mu, const Partition& nu, int m) {
  const int n = mu.size();
  if (m < 1 || nu.size() + m != n) throw std::invalid_argument("G_star_formula: need |mu| = |nu| + m, m >= 1");
  const Partition muc = conjugate(mu), nuc = conjugate(nu);
  const int ell = nu[0];
  const int L = std::max(muc.length(), ell + 1);
  std::vector<int> omega(size_t(L + 2), 0);
  omega[0] = m;
  for (int j = 1; j <= L + 1; ++j) omega[size_t(j)] = omega[size_t(j - 1)] - (muc[j - 1] - nuc[j - 1]);
  auto reject = [&](const std::string& why) {
    throw std::invalid_argument("G_star_formula: " + mu.str() + " is not eligible over " + nu.str() +
                                " with m = " + std::to_string(m) + " (" + why + ")");
  };
  for (int j = ell + 1; j <= L + 1; ++j)
    if (omega[size_t(j)] != 0) reject("omega does not vanish past ell");
  for (int j = 0; j <= ell; ++j) {
    if (omega[size_t(j + 1)] > omega[size_t(j)] || omega[size_t(j + 1)] < 0) reject("omega not monotone");
    if (j >= 1 && omega[size_t(j)] - omega[size_t(j + 1)] > nuc[j - 1] - nuc[j])
      reject("omega step too large");
  }
  IntLaurent g = IntLaurent::q_pow(m * (n - m - nuc[0]));
  for (int j = 1; j <= ell; ++j) {
    const int wj = omega[size_t(j)], wj1 = omega[size_t(j + 1)];
    const int dn = nuc[j - 1] - nuc[j];
    g *= (q_binomial(m - wj1, wj - wj1) * landsberg_C(dn, wj - wj1)).shifted(wj1 * dn);
  }
  return g;
}

CountReport F_mu_lambda_recursive(const Partition& mu, const Composition& Lambda) {
  if (mu.size() != Lambda.size()) throw std::invalid_argument("F_mu_lambda_recursive: size mismatch");
  std::map<std::pair<Partition, std::vector<int>>, IntLaurent> memo;
  std::function<IntLaurent(const Partition&, const std::vector<int>&)> rec =
      [&](const Partition& m, const std::vector<int>& parts) -> IntLaurent {
    if (parts.size() == 1) return m.length() == m.size() ? IntLaurent(1) : IntLaurent();
    auto key = std::make_pair(m, parts);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int last = parts.back();
    std::vector<int> head(parts.begin(), parts.end() - 1);
    IntLaurent sum;
    for (const auto& nu : partitions_of(m.size() - last)) {
      bool eligible = false;
      for (const auto& cand : eligible_partitions(nu, last))
        if (cand == m) eligible = true;
      if (!eligible) continue;
      IntLaurent sub = rec(nu, head);
      if (!sub.is_zero()) sum += G_star_formula(m, nu, last) * sub;
    }
    memo.emplace(key, sum);
    return sum;
  };
  return CountReport(rec(mu, Lambda.parts), "recursive");
}

// ---------------------------------------------------------------------------
// F_{mu h}

CountReport F_mu_h_tableaux(const Partition& mu, const HessenbergFunction& h) {
  const int n = h.n();
  if (mu.size() != n) throw std::invalid_argument("F_mu_h_tableaux: |mu| != n");
  const int l = mu.length();
  IntLaurent f = (substitute_inverse(underline_F(conjugate(mu), h)) * q_minus_one_pow(n - l))
                     .shifted(binom2(n) - n_stat(mu) - (n - l));
  require(f.is_polynomial(), "F_mu_h_tableaux: result is not a polynomial");
  return CountReport(f, "tableaux");
}

namespace {

std::mutex chrom_mutex;
std::map<std::vector<int>, std::map<Partition, IntLaurent>> chrom_cache;

const std::map<Partition, IntLaurent>& chromatic_coeffs_cached(const HessenbergFunction& h) {
  {
    std::lock_guard<std::mutex> lock(chrom_mutex);
    auto it = chrom_cache.find(h.values());
    if (it != chrom_cache.end()) return it->second;
  }
  auto c = chromatic_e_coeffs(h);
  std::lock_guard<std::mutex> lock(chrom_mutex);
  return chrom_cache.emplace(h.values(), std::move(c)).first->second;
}

constexpr int kChromaticMaxN = 7;

}  // namespace

CountReport F_mu_h_chromatic(const Partition& mu, const HessenbergFunction& h) {
  const int n = h.n();
  if (mu.size() != n) throw std::invalid_argument("F_mu_h_chromatic: |mu| != n");
  if (n > kChromaticMaxN)
    throw BudgetExceeded("F_mu_h_chromatic: n = " + std::to_string(n) + " exceeds the coloring budget",
                         Int(n));
  const auto& c = chromatic_coeffs_cached(h);
  QRational via_f;
  for (const auto& [lam, cl] : c) {
    IntLaurent f = F_mu_lambda_value(mu, lam);
    if (f.is_zero()) continue;
    via_f += QRational(cl * f, q_factorial(lam) * u_lambda_order(lam));
  }
  via_f *= QRational(u_h_order(h));
  QRational via_inner = QRational((IntLaurent::q_pow(n * n - h.weight()) * q_minus_one_pow(n)),
                                  centralizer_order(mu)) *
                        modified_HL_inner_e(mu, c);
  IntLaurent a = laurent_or_throw(via_f, "F_mu_h_chromatic");
  IntLaurent b = laurent_or_throw(via_inner, "F_mu_h_chromatic");
  require(a == b, "F_mu_h_chromatic: the two symmetric-function routes disagree for " + mu.str() +
                      ", h = " + h.str());
  require(a == F_mu_h_tableaux(mu, h).value,
          "F_mu_h_chromatic: disagrees with the tableau formula for " + mu.str() + ", h = " + h.str());
  return CountReport(a, "chromatic");
}

QRational xh_inner_product(const HessenbergFunction& h, const Partition& mu) {
  const int n = h.n();
  IntLaurent num(1);
  int e = 0;
  for (int m : conj_steps(mu)) {
    num *= q_factorial(m);
    e -= binom2(m);
  }
  e -= -n_stat(mu) - h.weight() + binom2(n) + n;
  IntLaurent v = (num * substitute_inverse(underline_F(conjugate(mu), h))).shifted(e);
  if (n <= kChromaticMaxN) {
    QRational w = modified_HL_inner_e(mu, chromatic_coeffs_cached(h));
    require(w == QRational(v), "xh_inner_product: tableau and symmetric-function values differ for " +
                                   mu.str() + ", h = " + h.str());
  }
  return QRational(v);
}

IntLaurent hess_variety_count(const HessenbergFunction& h, const Partition& mu) {
  const int n = h.n();
  IntLaurent num = centralizer_order(mu) * F_mu_h_tableaux(mu, h).value;
  IntLaurent a = num.exact_div(q_minus_one_pow(n).shifted(binom2(n)));
  IntLaurent b = laurent_or_throw(xh_inner_product(h, mu), "hess_variety_count").shifted(-h.edge_count());
  require(a == b, "hess_variety_count: routes disagree for " + mu.str() + ", h = " + h.str());
  require(a.is_polynomial(), "hess_variety_count: not a polynomial");
  return a;
}

// ---------------------------------------------------------------------------
// X^2 = 0

IntLaurent a_nk_macdonald(const Partition& lambda, int k) {
  const int n = lambda.size();
  if (k < 0 || 2 * k > n) return IntLaurent();
  const Partition muc({n - k, k});
  QRational coeff = macdonald_Q0(muc, true).coeff(lambda);
  QRational v = coeff * QRational((q_factorial(lambda) * q_minus_one_pow(n))
                                      .shifted(n * k - k * k - n_stat(conjugate(lambda)) - n));
  return laurent_or_throw(v, "a_nk_macdonald");
}

IntLaurent a_nk_explicit(const Partition& lambda, int k) {
  const int n = lambda.size();
  if (k < 0 || 2 * k > n) return IntLaurent();
  const int d = n - 2 * k;
  QRational abar;
  for (int j = 0; j <= k; ++j) {
    QRational ratio = 1;
    if (!(d == 0 && j == 0))
      ratio = QRational(IntLaurent::q_pow(d + 2 * j) - IntLaurent(1),
                        IntLaurent::q_pow(d + j) - IntLaurent(1));
    QRational inner;
    for (const auto& nu : partitions_of(n - k + j))
      for (const auto& rho : partitions_of(k - j)) {
        auto f = hall_f1(nu, rho);
        auto it = f.find(lambda);
        if (it == f.end()) continue;
        inner += QRational(IntLaurent::monomial(it->second, n_stat(conjugate(nu)) + n_stat(conjugate(rho))),
                           q_factorial(nu) * q_factorial(rho));
      }
    IntLaurent pre = q_binomial(d + j, j).shifted(-binom2(j + 1) - d * j);
    if (j % 2) pre = -pre;
    abar += QRational(pre) * ratio * inner;
  }
  // the bracket sum carries the factor [lambda]_q! coming from the monomial coefficient
  QRational v =
      abar * QRational(q_factorial(lambda).shifted(n * k - k * k - n_stat(conjugate(lambda))));
  return laurent_or_throw(v, "a_nk_explicit");
}

IntLaurent a_nk(const Partition& lambda, int k) {
  IntLaurent a = a_nk_macdonald(lambda, k);
  IntLaurent b = a_nk_explicit(lambda, k);
  require(a == b, "a_nk: the two formulas disagree for " + lambda.str() + ", k = " + std::to_string(k));
  return a;
}

IntLaurent C_lambda(const Partition& lambda) {
  const int n = lambda.size();
  IntLaurent c(1);
  for (int k = 1; 2 * k <= n; ++k) {
    std::vector<int> parts(size_t(k), 2);
    parts.resize(size_t(n - k), 1);
    Partition mu(parts);
    if (dominates(lambda, conjugate(mu))) c += F_mu_lambda_value(mu, lambda);
  }
  IntLaurent s;
  for (int k = 0; 2 * k <= n; ++k) s += a_nk(lambda, k);
  require(c == s, "C_lambda: F-sum and a_nk-sum disagree for " + lambda.str());
  return c;
}

int chi3(long n) {
  long r = ((n % 3) + 3) % 3;
  return r == 0 ? 0 : (r == 1 ? 1 : -1);
}

namespace {

// q^{e/3}, where e must be divisible by 3 whenever the character factor is nonzero
IntLaurent chi_term(int chi, long e) {
  if (chi == 0) return IntLaurent();
  if (e % 3 != 0) throw ArithmeticError("non-integral exponent in closed form");
  return IntLaurent::monomial(Int(chi), int(e / 3));
}

}  // namespace

IntLaurent A_n(int n) {
  if (n < 0) return IntLaurent();
  IntLaurent a;
  for (int j = 0; 2 * j <= n; ++j) {
    IntLaurent t = q_binomial(n - j, j).shifted(binom2(j));
    a += j % 2 ? -t : t;
  }
  IntLaurent closed = chi_term(chi3(n + 1), binom2(n));
  if (n % 2) closed = -closed;
  require(a == closed, "A_n: closed form fails at n = " + std::to_string(n));
  return a;
}

IntLaurent B_n(int n) {
  if (n == 0) return IntLaurent(1);
  QRational b;
  for (int j = 0; 2 * j <= n; ++j) {
    QRational t = QRational(q_binomial(n - j, j).shifted(binom2(j))) * QRational(q_int(n), q_int(n - j));
    b += j % 2 ? -t : t;
  }
  IntLaurent v = laurent_or_throw(b, "B_n");
  require(v == A_n(n) - A_n(n - 2).shifted(n - 1), "B_n: B_n != A_n - q^{n-1} A_{n-2}");
  return v;
}

IntLaurent C_n_double_sum(int n) {
  QRational c;
  for (int k1 = 0; 2 * k1 <= n; ++k1)
    for (int k2 = 0; 2 * (k1 + k2) <= n; ++k2) {
      QRational ratio = 1;
      if (n - 2 * k1 != 0) ratio = QRational(q_int(n - 2 * k1), q_int(n - 2 * k1 - k2));
      IntLaurent t = (IntLaurent(binomial(n, k1)) * q_binomial(n - 2 * k1 - k2, k2))
                         .shifted(n * k1 - k1 * k1 + binom2(k2));
      if (k2 % 2) t = -t;
      c += QRational(t) * ratio;
    }
  return laurent_or_throw(c, "C_n_double_sum");
}

IntLaurent C_n_via_B(int n) {
  IntLaurent c;
  for (int k1 = 0; 2 * k1 <= n; ++k1)
    c += (IntLaurent(binomial(n, k1)) * B_n(n - 2 * k1)).shifted(n * k1 - k1 * k1);
  return c;
}

IntLaurent C_n_ekhad(int n) {
  if (n < 1) throw std::invalid_argument("C_n_ekhad: n >= 1");
  IntLaurent c;
  if (n % 2) {
    const int m = (n - 1) / 2;
    for (int j = 0; j <= m; ++j) {
      IntLaurent br = chi_term(chi3(j + 1), binom2(2 * j + 1)) - chi_term(chi3(j), binom2(2 * j + 2));
      c += (IntLaurent(binomial(n, m - j)) * br).shifted(m * m + m - j * j - j);
    }
  } else {
    const int m = n / 2;
    c = IntLaurent::monomial(binomial(n, m), m * m);
    for (int j = 1; j <= m; ++j) {
      IntLaurent br =
          chi_term(chi3(2 * j + 1), binom2(2 * j)) - chi_term(chi3(2 * j - 1), binom2(2 * j + 1));
      c += (IntLaurent(binomial(n, m - j)) * br).shifted(m * m - j * j);
    }
  }
  return c;
}

IntLaurent C_n_ekhad_sum_over_Z(int n) {
  if (n < 1) throw std::invalid_argument("C_n_ekhad_sum_over_Z: n >= 1");
  IntLaurent c;
  const int m = n / 2;
  // exponent m^2 + m - 3j^2 - 2j for odd n, m^2 - 3j^2 - j for even n
  const int base = n % 2 ? m * m + m : m * m;
  const int lin = n % 2 ? 2 : 1;
  for (int j = -n; j <= n; ++j) {
    Int coef = binom_or_zero(n, m - 3 * j) - binom_or_zero(n, m - 3 * j - 1);
    if (coef != 0) c += IntLaurent::monomial(coef, base - 3 * j * j - lin * j);
  }
  return c;
}

IntLaurent C_n_closed(int n) {
  IntLaurent a = C_n_double_sum(n);
  require(a == C_n_via_B(n), "C_n: double sum and B_n form disagree");
  require(a == C_n_ekhad(n), "C_n: double sum and closed form disagree");
  require(a == C_n_ekhad_sum_over_Z(n), "C_n: double sum and lattice-sum form disagree");
  return a;
}

// ---------------------------------------------------------------------------
// polynomials in w

WPoly wpoly_add(const WPoly& a, const WPoly& b) {
  WPoly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

WPoly wpoly_mul(const WPoly& a, const WPoly& b) {
  if (a.empty() || b.empty()) return {};
  WPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  while (!r.empty() && r.back().is_zero()) r.pop_back();
  return r;
}

WPoly wpoly_scale(const WPoly& a, const QRational& c) {
  WPoly r;
  if (c.is_zero()) return r;
  for (const auto& x : a) r.push_back(x * c);
  return r;
}

WPoly wpoly_substitute_inverse(const WPoly& a) {
  WPoly r;
  for (const auto& x : a) r.push_back(x.substitute_inverse());
  return r;
}

bool wpoly_equal(const WPoly& a, const WPoly& b) {
  size_t n = std::max(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) {
    QRational x = i < a.size() ? a[i] : QRational();
    QRational y = i < b.size() ? b[i] : QRational();
    if (x != y) return false;
  }
  return true;
}

std::string wpoly_str(const WPoly& a) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << a[i].str() << ")";
    if (i) os << "*w^" << i;
  }
  return first ? "0" : os.str();
}

WPoly hermite(int n) {
  if (n < 0) return {};
  WPoly prev, cur{QRational(1)};
  for (int k = 0; k < n; ++k) {
    WPoly next = wpoly_mul({QRational(), QRational(2)}, cur);
    next = wpoly_add(next, wpoly_scale(prev, QRational(IntLaurent::q_pow(k) - IntLaurent(1))));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

WPoly chebyshev_T(int k) {
  WPoly prev{QRational(1)};
  if (k == 0) return prev;
  WPoly cur{QRational(), QRational(1)};
  for (int i = 1; i < k; ++i) {
    WPoly next = wpoly_add(wpoly_mul({QRational(), QRational(2)}, cur), wpoly_scale(prev, QRational(-1)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

WPoly chebyshev_T(const Partition& rho) {
  WPoly r{QRational(1)};
  for (int part : rho.parts()) r = wpoly_mul(r, chebyshev_T(part));
  return r;
}

WPoly kirillov_lhs(const Partition& lambda) {
  const int n = lambda.size();
  WPoly s;
  for (int k = 0; 2 * k <= n; ++k) {
    IntLaurent a = a_nk(lambda, k);
    if (a.is_zero()) continue;
    WPoly hk = wpoly_substitute_inverse(hermite(n - 2 * k));
    s = wpoly_add(s, wpoly_scale(hk, QRational(a.shifted(k * (k - n)))));
  }
  return s;
}

WPoly kirillov_rhs(const Partition& lambda) {
  const int n = lambda.size();
  WPoly prod{QRational(
      (q_factorial(lambda) * q_minus_one_pow(n)).shifted(-n_stat(conjugate(lambda))))};
  for (int part : lambda.parts()) {
    WPoly factor;
    for (const auto& rho : partitions_of(part)) {
      IntLaurent den(z_rho(rho));
      for (int r : rho.parts()) den *= IntLaurent::q_pow(r) - IntLaurent(1);
      Int two = 1;
      for (int i = 0; i < rho.length(); ++i) two *= 2;
      factor = wpoly_add(factor, wpoly_scale(chebyshev_T(rho), QRational(IntLaurent(two), den)));
    }
    prod = wpoly_mul(prod, factor);
  }
  return prod;
}

bool kirillov_identity_check(const Partition& lambda) {
  return wpoly_equal(kirillov_lhs(lambda), kirillov_rhs(lambda));
}

// ---------------------------------------------------------------------------
// hooks

IntLaurent hook_F(const Partition& lambda, int k) {
  const int n = lambda.size();
  const int s = lambda.length();
  if (k < 0 || k > s - 1)
    throw std::invalid_argument("hook_F: need 0 <= k <= l(lambda) - 1");
  if (k == 0) return IntLaurent(1);
  // lambda is 1-indexed in the sum
  auto lam = [&](int i) { return lambda[i - 1]; };
  IntLaurent sum;
  for (int j = 2; j <= s - k + 1; ++j) {
    int prefix = 0;
    for (int i = 1; i < j; ++i) prefix += lam(i);
    // sets A with min A = j: choose k - 1 more from {j+1, ..., s}
    IntLaurent inner;
    std::function<void(int, int, IntLaurent)> choose = [&](int from, int left, IntLaurent acc) {
      if (left == 0) {
        inner += acc;
        return;
      }
      for (int i = from; i <= s - left + 1; ++i) choose(i + 1, left - 1, acc * q_int_inv(lam(i)));
    };
    choose(j + 1, k - 1, q_int_inv(lam(j)));
    sum += q_int_inv(prefix) * inner;
  }
  IntLaurent f = (sum * q_minus_one_pow(k)).shifted(binom2(n) - binom2(n - k) - k);
  require(f.is_polynomial(), "hook_F: not a polynomial");
  return f;
}

IntLaurent yip_F(int n, int k) {
  if (k < 1 || k > n - 1) throw std::invalid_argument("yip_F: need 1 <= k <= n - 1");
  IntLaurent s;
  for (int j = 1; j <= n - k; ++j) s += IntLaurent::monomial(binomial(n - j, k), -(j - 1));
  return (s * q_minus_one_pow(k)).shifted(binom2(n - 1) - binom2(n - k - 1));
}

IntLaurent two_rows_hook_F(int l, int k) {
  if (k < 1 || k > l - 1) throw std::invalid_argument("two_rows_hook_F: need 1 <= k <= l - 1");
  const int n = 2 * l;
  IntLaurent s;
  for (int j = 1; j <= 2 * (l - k); ++j)
    s += IntLaurent::monomial(binomial(l - (j + 1) / 2, k), -(j - 1));
  IntLaurent qp1 = IntLaurent::from_coeffs({1, 1});
  return (s * q_minus_one_pow(k) * qp1.pow(unsigned(k))).shifted(binom2(n - 1) - binom2(n - k - 1) - k);
}

// ---------------------------------------------------------------------------

IntLaurent double_coset_count(const HessenbergFunction& h1, const HessenbergFunction& h2) {
  if (h1.n() != h2.n()) throw std::invalid_argument("double_coset_count: different n");
  const int n = h1.n();
  IntLaurent s;
  for (const auto& mu : partitions_of(n)) {
    IntLaurent f1 = F_mu_h_tableaux(mu, h1).value;
    if (f1.is_zero()) continue;
    IntLaurent f2 = F_mu_h_tableaux(mu, h2).value;
    if (f2.is_zero()) continue;
    s += centralizer_order(mu) * f1 * f2;
  }
  s = s.shifted(h1.weight() + h2.weight() - 2 * n * n);
  require(s.is_polynomial(), "double_coset_count: not a polynomial");
  return s;
}

IntLaurent induced_char_value(const HessenbergFunction& h, const Partition& mu) {
  IntLaurent v = (centralizer_order(mu) * F_mu_h_tableaux(mu, h).value).shifted(-h.free_entries());
  require(v.is_polynomial(), "induced_char_value: not a polynomial");
  return v;
}

IntLaurent fuchs_kirillov_R(const Partition& mu, const Partition& lambda) {
  const int n = mu.size();
  const Partition muc = conjugate(mu);
  if (!dominates(lambda, muc)) throw std::invalid_argument("fuchs_kirillov_R: need lambda <= mu'");
  int e = binom2(n) - binom2(mu.length());
  for (int j = 0; j < muc.length(); ++j) e -= muc[j] * muc[j + 1];
  IntLaurent f = F_mu_lambda_value(mu, lambda);
  IntLaurent r = f.shifted(-e).exact_div(q_minus_one_pow(n - mu.length()));
  require(r.is_polynomial() && r.coeff(0) == 1, "fuchs_kirillov_R: R(0) != 1 for " + mu.str() + ", " +
                                                    lambda.str());
  require(r.eval_int(1) > 0, "fuchs_kirillov_R: R(1) <= 0");
  return r;
}

}  // namespace jc
