#include "jc/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace jc {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::M: return "M";
    case Basis::E: return "E";
    case Basis::H: return "H";
    case Basis::P: return "P";
    case Basis::S: return "S";
  }
  return "?";
}

Basis basis_from_name(const std::string& s) {
  if (s == "M" || s == "m") return Basis::M;
  if (s == "E" || s == "e") return Basis::E;
  if (s == "H" || s == "h") return Basis::H;
  if (s == "P" || s == "p") return Basis::P;
  if (s == "S" || s == "s") return Basis::S;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

SymPoly SymPoly::element(Basis basis, const Partition& lambda, const QRational& c) {
  SymPoly f(lambda.size(), basis);
  f.add(lambda, c);
  return f;
}

QRational SymPoly::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? QRational() : it->second;
}

void SymPoly::add(const Partition& lambda, const QRational& c) {
  if (lambda.size() != degree_) throw std::invalid_argument("SymPoly: partition of wrong size");
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.degree_ != degree_) throw std::invalid_argument("SymPoly: degree mismatch");
  const SymPoly& other = o.basis_ == basis_ ? o : convert(o, basis_);
  for (const auto& [lam, c] : other.terms_) add(lam, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) { return *this += o * QRational(-1); }

SymPoly& SymPoly::operator*=(const QRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [lam, v] : terms_) v *= c;
  return *this;
}

SymPoly SymPoly::substitute_inverse() const {
  SymPoly r(degree_, basis_);
  for (const auto& [lam, c] : terms_) r.add(lam, c.substitute_inverse());
  return r;
}

nlohmann::json SymPoly::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lam, c] : terms_) {
    nlohmann::json coeff;
    if (c.is_laurent())
      coeff = c.num().to_json();
    else
      coeff = {{"num", c.num().to_json()}, {"den", c.den().to_json()}};
    terms.push_back({{"partition", jc::to_json(lam)}, {"coeff", coeff}});
  }
  return {{"basis", basis_name(basis_)}, {"degree", degree_}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// transition matrices

namespace {

// Coefficient of x^mu in f_{lambda_1} f_{lambda_2} ... where the monomials of f_k
// are produced by `pieces(k, remaining)`.
Int product_coefficient(
    const std::vector<int>& lambda, const std::vector<int>& mu,
    const std::function<void(int, const std::vector<int>&,
                             const std::function<void(const std::vector<int>&)>&)>& pieces) {
  std::map<std::pair<size_t, std::vector<int>>, Int> memo;
  std::function<Int(size_t, const std::vector<int>&)> rec = [&](size_t i,
                                                                const std::vector<int>& rem) {
    if (i == lambda.size()) {
      for (int r : rem)
        if (r) return Int(0);
      return Int(1);
    }
    auto key = std::make_pair(i, rem);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Int total = 0;
    pieces(lambda[i], rem, [&](const std::vector<int>& next) { total += rec(i + 1, next); });
    memo.emplace(key, total);
    return total;
  };
  return rec(0, mu);
}

void e_pieces(int k, const std::vector<int>& rem,
              const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur = rem;
  std::function<void(size_t, int)> go = [&](size_t j, int left) {
    if (left == 0) {
      emit(cur);
      return;
    }
    if (j == cur.size() || int(cur.size() - j) < left) return;
    if (cur[j] > 0) {
      --cur[j];
      go(j + 1, left - 1);
      ++cur[j];
    }
    go(j + 1, left);
  };
  go(0, k);
}

void h_pieces(int k, const std::vector<int>& rem,
              const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur = rem;
  std::function<void(size_t, int)> go = [&](size_t j, int left) {
    if (left == 0) {
      emit(cur);
      return;
    }
    if (j == cur.size()) return;
    for (int t = 0; t <= std::min(left, cur[j]); ++t) {
      cur[j] -= t;
      go(j + 1, left - t);
      cur[j] += t;
    }
  };
  go(0, k);
}

void p_pieces(int k, const std::vector<int>& rem,
              const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> cur = rem;
  for (size_t j = 0; j < cur.size(); ++j)
    if (cur[j] >= k) {
      cur[j] -= k;
      emit(cur);
      cur[j] += k;
    }
}

struct Transition {
  std::vector<Partition> parts;
  std::map<Partition, size_t> index;
  // to_m[i][j]: coefficient of m_j in b_i; from_m = inverse
  std::vector<std::vector<Rat>> to_m, from_m;
};

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> a) {
  const size_t n = a.size();
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw ArithmeticError("transition matrix is singular");
    std::swap(a[piv], a[c]);
    std::swap(inv[piv], inv[c]);
    Rat f = a[c][c];
    for (size_t j = 0; j < n; ++j) {
      a[c][j] /= f;
      inv[c][j] /= f;
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat g = a[i][c];
      for (size_t j = 0; j < n; ++j) {
        a[i][j] -= g * a[c][j];
        inv[i][j] -= g * inv[c][j];
      }
    }
  }
  return inv;
}

const Transition& transition(Basis b, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Transition> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(int(b), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Transition t;
  t.parts = partitions_of(n);
  for (size_t i = 0; i < t.parts.size(); ++i) t.index[t.parts[i]] = i;
  const size_t N = t.parts.size();
  t.to_m.assign(N, std::vector<Rat>(N, Rat(0)));
  for (size_t i = 0; i < N; ++i)
    for (size_t j = 0; j < N; ++j) t.to_m[i][j] = transition_coeff(b, t.parts[i], t.parts[j]);
  t.from_m = invert(t.to_m);
  return cache.emplace(key, std::move(t)).first->second;
}

}  // namespace

Rat transition_coeff(Basis b, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("transition_coeff: size mismatch");
  switch (b) {
    case Basis::M: return lambda == mu ? Rat(1) : Rat(0);
    case Basis::S: return Rat(kostka(lambda, mu));
    case Basis::E: return Rat(product_coefficient(lambda.parts(), mu.parts(), e_pieces));
    case Basis::H: return Rat(product_coefficient(lambda.parts(), mu.parts(), h_pieces));
    case Basis::P: return Rat(product_coefficient(lambda.parts(), mu.parts(), p_pieces));
  }
  return Rat(0);
}

SymPoly convert(const SymPoly& f, Basis target) {
  if (f.basis() == target) return f;
  const int n = f.degree();
  SymPoly m(n, Basis::M);
  if (f.basis() == Basis::M) {
    m = f;
  } else {
    const Transition& t = transition(f.basis(), n);
    for (const auto& [lam, c] : f.terms()) {
      const auto& row = t.to_m[t.index.at(lam)];
      for (size_t j = 0; j < row.size(); ++j)
        if (row[j] != 0) m.add(t.parts[j], c * QRational(row[j]));
    }
  }
  if (target == Basis::M) return m;
  const Transition& t = transition(target, n);
  SymPoly out(n, target);
  for (const auto& [mu, c] : m.terms()) {
    const auto& row = t.from_m[t.index.at(mu)];
    for (size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) out.add(t.parts[j], c * QRational(row[j]));
  }
  return out;
}

QRational hall_inner(const SymPoly& f, const SymPoly& g) {
  if (f.degree() != g.degree()) throw std::invalid_argument("hall_inner: degree mismatch");
  SymPoly fh = convert(f, Basis::H);
  SymPoly gm = convert(g, Basis::M);
  QRational s;
  for (const auto& [lam, c] : fh.terms()) {
    QRational d = gm.coeff(lam);
    if (!d.is_zero()) s += c * d;
  }
  return s;
}

std::map<Partition, Int> hall_f1(const Partition& nu, const Partition& rho) {
  std::map<Partition, Int> out;
  const int n = nu.size() + rho.size();
  for (const auto& lam : partitions_of(n)) {
    const int L = lam.length();
    if (nu.length() > L || rho.length() > L) continue;
    std::vector<int> alpha = nu.parts();
    alpha.resize(size_t(L), 0);
    std::sort(alpha.begin(), alpha.end());
    Int count = 0;
    do {
      std::vector<int> beta(static_cast<size_t>(L));
      bool ok = true;
      for (int i = 0; i < L && ok; ++i) {
        beta[size_t(i)] = lam[i] - alpha[size_t(i)];
        ok = beta[size_t(i)] >= 0;
      }
      if (!ok) continue;
      std::sort(beta.rbegin(), beta.rend());
      if (Partition(beta) == rho) ++count;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    if (count != 0) out.emplace(lam, count);
  }
  return out;
}

SymPoly multiply(const SymPoly& f, const SymPoly& g) {
  SymPoly fm = convert(f, Basis::M), gm = convert(g, Basis::M);
  SymPoly out(f.degree() + g.degree(), Basis::M);
  for (const auto& [nu, a] : fm.terms())
    for (const auto& [rho, b] : gm.terms()) {
      QRational ab = a * b;
      for (const auto& [lam, c] : hall_f1(nu, rho)) out.add(lam, ab * QRational(c));
    }
  return out;
}

SymPoly omega(const SymPoly& f) {
  switch (f.basis()) {
    case Basis::E:
    case Basis::H: {
      SymPoly r(f.degree(), f.basis() == Basis::E ? Basis::H : Basis::E);
      for (const auto& [lam, c] : f.terms()) r.add(lam, c);
      return r;
    }
    case Basis::P: {
      SymPoly r(f.degree(), Basis::P);
      for (const auto& [lam, c] : f.terms()) {
        int sign = (lam.size() - lam.length()) % 2 == 0 ? 1 : -1;
        r.add(lam, c * QRational(long(sign)));
      }
      return r;
    }
    default:
      return convert(omega(convert(f, Basis::E)), f.basis());
  }
}

// ---------------------------------------------------------------------------
// chromatic quasisymmetric functions

SymPoly chromatic_qsf(const HessenbergFunction& h) {
  const int n = h.n();
  const int E = h.edge_count();
  // earlier neighbours of each vertex
  std::vector<std::vector<int>> back(size_t(n + 1));
  for (const auto& [i, j] : indifference_edges(h)) back[size_t(j)].push_back(i);
  std::unordered_map<long, std::vector<long>> tally;
  std::vector<int> color(size_t(n + 1), 0), counts(size_t(n), 0);
  long code = 0;
  std::vector<long> place(size_t(n), 1);
  for (int c = 1; c < n; ++c) place[size_t(c)] = place[size_t(c - 1)] * (n + 1);
  std::function<void(int, int)> rec = [&](int v, int asc) {
    if (v > n) {
      auto& slot = tally[code];
      if (slot.empty()) slot.assign(size_t(E + 1), 0);
      ++slot[size_t(asc)];
      return;
    }
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      int a = 0;
      for (int u : back[size_t(v)]) {
        if (color[size_t(u)] == c) {
          ok = false;
          break;
        }
        if (color[size_t(u)] < c) ++a;
      }
      if (!ok) continue;
      color[size_t(v)] = c;
      code += place[size_t(c)];
      rec(v + 1, asc + a);
      code -= place[size_t(c)];
    }
  };
  rec(1, 0);
  auto decode = [&](long x) {
    std::vector<int> comp(static_cast<size_t>(n));
    for (int c = 0; c < n; ++c) {
      comp[size_t(c)] = int(x % (n + 1));
      x /= n + 1;
    }
    return comp;
  };
  auto to_poly = [](const std::vector<long>& v) { return IntLaurent::from_coeffs(v); };
  SymPoly out(n, Basis::M);
  std::map<Partition, IntLaurent> by_partition;
  for (const auto& [x, v] : tally) {
    std::vector<int> comp = decode(x);
    bool is_partition = std::is_sorted(comp.rbegin(), comp.rend());
    if (is_partition) by_partition.emplace(Partition(comp), to_poly(v));
  }
  for (const auto& [x, v] : tally) {
    std::vector<int> comp = decode(x);
    std::sort(comp.rbegin(), comp.rend());
    auto it = by_partition.find(Partition(comp));
    if (it == by_partition.end() || it->second != to_poly(v))
      throw std::logic_error("chromatic_qsf: result is not symmetric for h = " + h.str());
  }
  for (const auto& [lam, poly] : by_partition) out.add(lam, poly);
  return out;
}

std::map<Partition, IntLaurent> chromatic_e_coeffs(const HessenbergFunction& h) {
  SymPoly e = convert(chromatic_qsf(h), Basis::E);
  std::map<Partition, IntLaurent> out;
  for (const auto& [lam, c] : e.terms()) {
    if (!c.is_laurent() || !c.num().is_polynomial())
      throw ArithmeticError("chromatic_e_coeffs: non-polynomial coefficient " + c.str());
    out.emplace(lam, c.num());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Macdonald polynomials at t = 0

SymPoly macdonald_P0(const Partition& mu, bool at_inverse) {
  SymPoly out(mu.size(), Basis::M);
  for (const auto& nu : partitions_of(mu.size())) {
    IntLaurent a = coeff_a(mu, nu);
    out.add(nu, at_inverse ? substitute_inverse(a) : a);
  }
  return out;
}

QRational b_mu_q0(const Partition& mu) {
  IntLaurent den(1);
  for (int j = 0; j < mu.length(); ++j) den *= q_pochhammer(mu[j] - mu[j + 1]);
  return QRational(IntLaurent(1), den);
}

SymPoly macdonald_Q0(const Partition& mu, bool at_inverse) {
  QRational b = b_mu_q0(mu);
  if (at_inverse) b = b.substitute_inverse();
  return macdonald_P0(mu, at_inverse) * b;
}

SymPoly modified_HL(const Partition& mu) {
  SymPoly p = macdonald_P0(conjugate(mu), true) * QRational(IntLaurent::q_pow(n_stat(mu)));
  return omega(convert(p, Basis::E));
}

QRational modified_HL_inner_e(const Partition& mu, const std::map<Partition, IntLaurent>& c) {
  const Partition muc = conjugate(mu);
  IntLaurent s;
  for (const auto& [lam, cl] : c) s += cl * substitute_inverse(coeff_a(muc, lam));
  return QRational(s.shifted(n_stat(mu)));
}

SymPoly g_row(int l) {
  SymPoly out(l, Basis::M);
  if (l == 0) {
    out.add(Partition(), 1);
    return out;
  }
  for (const auto& nu : partitions_of(l)) {
    IntLaurent den(1);
    for (int part : nu.parts()) den *= q_pochhammer(part);
    out.add(nu, QRational(IntLaurent(1), den));
  }
  return out;
}

SymPoly jing_jozefiak_Q(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("jing_jozefiak_Q: need 0 <= k <= n/2");
  SymPoly out(n, Basis::M);
  const int d = n - 2 * k;
  for (int j = 0; j <= k; ++j) {
    QRational ratio = 1;
    if (!(d == 0 && j == 0))
      ratio = QRational(IntLaurent(1) - IntLaurent::q_pow(d + 2 * j),
                        IntLaurent(1) - IntLaurent::q_pow(d + j));
    IntLaurent pre = q_binomial(d + j, j).shifted(j * (j - 1) / 2);
    if (j % 2) pre = -pre;
    SymPoly prod = multiply(g_row(n - k + j), g_row(k - j));
    out += prod * (ratio * QRational(pre));
  }
  return out;
}

Bivariate two_var_P(int n, int k) {
  if (k < 0 || 2 * k > n) throw std::invalid_argument("two_var_P: need 0 <= k <= n/2");
  Bivariate out;
  const int d = n - 2 * k;
  for (int j = 0; j <= d; ++j)
    out[{k + d - j, k + j}] += substitute_inverse(q_binomial(d, j));
  return out;
}

Bivariate restrict_to_two_vars(const SymPoly& f) {
  if (f.basis() != Basis::M) return restrict_to_two_vars(convert(f, Basis::M));
  Bivariate out;
  for (const auto& [lam, c] : f.terms()) {
    if (lam.length() > 2) continue;
    IntLaurent v = c.to_laurent();
    out[{lam[0], lam[1]}] += v;
    if (lam[0] != lam[1]) out[{lam[1], lam[0]}] += v;
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace jc
