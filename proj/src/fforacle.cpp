#include "jc/fforacle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <functional>
#include <future>
#include <numeric>
#include <set>
#include <thread>

namespace jc {

MatrixFp::MatrixFp(int p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), a_(size_t(rows * cols), 0) {
  if (!is_prime(p)) throw std::invalid_argument("MatrixFp: modulus must be prime");
}

MatrixFp MatrixFp::identity(int p, int n) {
  MatrixFp m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

MatrixFp MatrixFp::jordan(int p, const Partition& mu) {
  MatrixFp m(p, mu.size(), mu.size());
  int start = 0;
  for (int b : mu.parts()) {
    for (int k = 0; k + 1 < b; ++k) m.set(start + k, start + k + 1, 1);
    start += b;
  }
  return m;
}

void MatrixFp::set(int i, int j, long v) {
  long r = v % p_;
  if (r < 0) r += p_;
  a_[size_t(i * cols_ + j)] = int(r);
}

MatrixFp operator*(const MatrixFp& a, const MatrixFp& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw std::invalid_argument("matrix shape mismatch");
  MatrixFp c(a.p_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      long s = 0;
      for (int k = 0; k < a.cols_; ++k) s += long(a(i, k)) * b(k, j);
      c.a_[size_t(i * c.cols_ + j)] = int(s % a.p_);
    }
  return c;
}

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::vector<int> inverse_table(int p) {
  std::vector<int> inv(size_t(p), 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inv[size_t(a)] = b;
  return inv;
}

const std::vector<int>& inverses(int p) {
  static thread_local std::map<int, std::vector<int>> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, inverse_table(p)).first;
  return it->second;
}

// In-place elimination on a row-major buffer; returns the rank.
int eliminate(int* a, int rows, int cols, int stride, int p, const std::vector<int>& inv) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i * stride + c]) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = c; j < cols; ++j) std::swap(a[piv * stride + j], a[r * stride + j]);
    const int iv = inv[size_t(a[r * stride + c])];
    for (int j = c; j < cols; ++j) a[r * stride + j] = a[r * stride + j] * iv % p;
    for (int i = r + 1; i < rows; ++i) {
      const int f = a[i * stride + c];
      if (!f) continue;
      for (int j = c; j < cols; ++j) {
        int v = (a[i * stride + j] - f * a[r * stride + j]) % p;
        a[i * stride + j] = v < 0 ? v + p : v;
      }
    }
    ++r;
  }
  return r;
}

constexpr int kMaxDim = 12;
using Buf = std::array<int, kMaxDim * kMaxDim>;

// ranks r_1, r_2, ... of X, X^2, ... until 0; X is n x n with stride kMaxDim
std::vector<int> power_ranks(const Buf& X, int n, int p, const std::vector<int>& inv,
                             bool require_nilpotent) {
  std::vector<int> ranks;
  Buf P = X, tmp, work;
  for (int k = 1; k <= n + 1; ++k) {
    work = P;
    int r = eliminate(work.data(), n, n, kMaxDim, p, inv);
    ranks.push_back(r);
    if (r == 0) return ranks;
    if (k == n) break;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int s = 0;
        for (int t = 0; t < n; ++t) s += P[size_t(i * kMaxDim + t)] * X[size_t(t * kMaxDim + j)];
        tmp[size_t(i * kMaxDim + j)] = s % p;
      }
    P = tmp;
  }
  if (require_nilpotent) throw NotNilpotent("matrix is not nilpotent");
  return ranks;
}

Partition type_from_ranks(int n, const std::vector<int>& ranks) {
  std::vector<int> conj;
  int prev = n;
  for (int r : ranks) {
    if (prev - r > 0) conj.push_back(prev - r);
    prev = r;
  }
  return conjugate(Partition(conj));
}

Buf to_buf(const MatrixFp& m) {
  Buf b{};
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) b[size_t(i * kMaxDim + j)] = m(i, j);
  return b;
}

Int int_pow(long base, long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return r;
}

void check_count(int p, int free, const Budget& budget, const std::string& what) {
  if (free > budget.free_limit(p))
    throw BudgetExceeded(what + ": " + std::to_string(free) + " free entries over F_" +
                             std::to_string(p) + " exceeds the budget of " +
                             std::to_string(budget.free_limit(p)),
                         int_pow(p, free));
}

// Runs body(first_value) for each value of the leading free entry, possibly in parallel.
template <class Result, class Body>
std::vector<Result> split_first(int p, int threads, Body body) {
  std::vector<Result> out(static_cast<size_t>(p));
  if (threads <= 1) {
    for (int v = 0; v < p; ++v) out[size_t(v)] = body(v);
    return out;
  }
  std::vector<std::future<Result>> fs;
  for (int v = 0; v < p; ++v) fs.push_back(std::async(std::launch::async, body, v));
  for (int v = 0; v < p; ++v) out[size_t(v)] = fs[size_t(v)].get();
  return out;
}

std::vector<std::pair<int, int>> free_positions(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> pos;
  for (int i = 1; i <= h.n(); ++i)
    for (int j = h(i) + 1; j <= h.n(); ++j) pos.emplace_back(i - 1, j - 1);
  return pos;
}

// Visits every assignment of values in [0,p) to `count` slots, with slot 0 fixed to `first`.
template <class Visit>
void odometer(int p, int count, int first, Visit visit) {
  std::vector<int> v(size_t(count), 0);
  if (count == 0) {
    visit(v);
    return;
  }
  v[0] = first;
  while (true) {
    visit(v);
    int k = count - 1;
    while (k >= 1) {
      if (++v[size_t(k)] < p) break;
      v[size_t(k)] = 0;
      --k;
    }
    if (k < 1) return;
  }
}

}  // namespace

int rank_of_block(const MatrixFp& m, int rows, int cols) {
  std::vector<int> a(size_t(rows * cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a[size_t(i * cols + j)] = m(i, j);
  return eliminate(a.data(), rows, cols, cols, m.p(), inverses(m.p()));
}

bool inverse(const MatrixFp& m, MatrixFp* out) {
  const int n = m.rows(), p = m.p();
  if (m.cols() != n) return false;
  const auto& inv = inverses(p);
  std::vector<int> a(size_t(n * 2 * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[size_t(i * 2 * n + j)] = m(i, j);
    a[size_t(i * 2 * n + n + i)] = 1;
  }
  eliminate(a.data(), n, 2 * n, 2 * n, p, inv);
  for (int i = 0; i < n; ++i)
    if (a[size_t(i * 2 * n + i)] != 1) return false;
  // eliminate() leaves a unit upper triangular left block; clear above the pivots
  for (int c = n - 1; c >= 0; --c)
    for (int i = 0; i < c; ++i) {
      const int f = a[size_t(i * 2 * n + c)];
      if (!f) continue;
      for (int j = 0; j < 2 * n; ++j) {
        int v = (a[size_t(i * 2 * n + j)] - f * a[size_t(c * 2 * n + j)]) % p;
        a[size_t(i * 2 * n + j)] = v < 0 ? v + p : v;
      }
    }
  if (out) {
    *out = MatrixFp(p, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out->set(i, j, a[size_t(i * 2 * n + n + j)]);
  }
  return true;
}

int rank(const MatrixFp& m) { return rank_of_block(m, m.rows(), m.cols()); }

bool is_invertible(const MatrixFp& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

JordanType jordan_type(const MatrixFp& X, bool require_nilpotent) {
  if (X.rows() != X.cols()) throw std::invalid_argument("jordan_type: matrix must be square");
  const int n = X.rows();
  if (n == 0) return {Partition()};
  if (n > kMaxDim) throw std::invalid_argument("jordan_type: dimension too large");
  std::vector<int> ranks = power_ranks(to_buf(X), n, X.p(), inverses(X.p()), require_nilpotent);
  if (ranks.back() != 0) {
    // not nilpotent: report the type of the nilpotent part's rank drops only
    return {type_from_ranks(n - ranks.back(), [&] {
      std::vector<int> r;
      for (int v : ranks) r.push_back(v - ranks.back());
      return r;
    }())};
  }
  return {type_from_ranks(n, ranks)};
}

int Budget::free_limit(int p) const {
  if (max_free >= 0) return max_free;
  if (p == 2) return 16;
  if (p == 3) return 12;
  int f = 0;
  double cap = 12 * std::log(3.0);
  while ((f + 1) * std::log(double(p)) <= cap + 1e-9) ++f;
  return f;
}

Tally tally_ideal(const HessenbergFunction& h, int p, const Budget& budget) {
  if (!is_prime(p)) throw std::invalid_argument("tally_ideal: p must be prime");
  const int n = h.n();
  if (n > kMaxDim) throw std::invalid_argument("tally_ideal: n too large");
  auto pos = free_positions(h);
  const int free = int(pos.size());
  check_count(p, free, budget, "tally_ideal");
  using Local = std::map<std::vector<int>, long>;
  auto body = [&](int first) {
    Local local;
    const auto& inv_local = inverses(p);
    odometer(p, free, first, [&](const std::vector<int>& v) {
      Buf X{};
      for (int k = 0; k < free; ++k)
        X[size_t(pos[size_t(k)].first * kMaxDim + pos[size_t(k)].second)] = v[size_t(k)];
      ++local[power_ranks(X, n, p, inv_local, true)];
    });
    return local;
  };
  std::vector<Local> parts;
  if (free == 0) {
    parts.push_back(body(0));
  } else {
    parts = split_first<Local>(p, budget.threads, body);
  }
  Tally t;
  for (const auto& part : parts)
    for (const auto& [ranks, c] : part) t[type_from_ranks(n, ranks)] += c;
  return t;
}

IntLaurent rank_profile_formula(const std::vector<int>& n_seq, const std::vector<int>& r_seq,
                                int m) {
  const size_t l = n_seq.size();
  if (l == 0 || r_seq.size() != l) throw std::invalid_argument("rank_profile: bad sequence lengths");
  auto n_at = [&](size_t j) { return j <= l ? n_seq[j - 1] : 0; };
  auto r_at = [&](size_t j) { return j == 0 ? m : (j <= l ? r_seq[j - 1] : 0); };
  for (size_t j = 1; j <= l; ++j) {
    if (n_at(j) <= 0 || (j > 1 && n_at(j) > n_at(j - 1)))
      throw std::invalid_argument("rank_profile: n_seq must be nonincreasing and positive");
    if (r_at(j) < r_at(j + 1) || r_at(j) > r_at(j - 1))
      throw std::invalid_argument("rank_profile: r_seq must be nonincreasing and at most m");
    if (r_at(j) - r_at(j + 1) > n_at(j) - n_at(j + 1))
      throw std::invalid_argument("rank_profile: violates r_i - r_{i+1} <= n_i - n_{i+1}");
  }
  IntLaurent out(1);
  for (size_t j = 1; j <= l; ++j) {
    const int dn = n_at(j) - n_at(j + 1), dr = r_at(j) - r_at(j + 1);
    out *= q_binomial(m - r_at(j + 1), dr) * landsberg_C(dn, dr);
    out = out.shifted(r_at(j + 1) * dn);
  }
  return out;
}

RankProfileResult rank_profile_count(const std::vector<int>& n_seq, const std::vector<int>& r_seq,
                                     int m, int p, const Budget& budget) {
  RankProfileResult res{rank_profile_formula(n_seq, r_seq, m), 0};
  const int rows = n_seq.front();
  const int free = rows * m;
  check_count(p, free, budget, "rank_profile_count");
  const auto& inv = inverses(p);
  long count = 0;
  for (int first = 0; first < (free ? p : 1); ++first)
    odometer(p, free, first, [&](const std::vector<int>& v) {
      for (size_t i = 0; i < n_seq.size(); ++i) {
        std::vector<int> a(v.begin(), v.begin() + long(n_seq[i] * m));
        if (eliminate(a.data(), n_seq[i], m, m, p, inv) != r_seq[i]) return;
      }
      ++count;
    });
  res.brute = count;
  return res;
}

std::vector<Partition> eligible_partitions(const Partition& nu, int m) {
  if (m < 1) throw std::invalid_argument("eligible_partitions: m must be positive");
  std::vector<Partition> out;
  const Partition nuc = conjugate(nu);
  for (const auto& mu : partitions_of(nu.size() + m))
    if (is_horizontal_strip(conjugate(mu), nuc)) out.push_back(mu);
  return out;
}

Tally admissible_tally(const Partition& nu, int m, int p, const Budget& budget) {
  const int k = nu.size(), n = k + m;
  if (n > kMaxDim) throw std::invalid_argument("admissible_tally: dimension too large");
  const int free = k * m;
  check_count(p, free, budget, "admissible_count_brute");
  MatrixFp J = MatrixFp::jordan(p, nu);
  Buf base{};
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) base[size_t(i * kMaxDim + j)] = J(i, j);
  using Local = std::map<std::vector<int>, long>;
  auto body = [&](int first) {
    Local local;
    const auto& inv = inverses(p);
    odometer(p, free, first, [&](const std::vector<int>& v) {
      Buf A = base;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < m; ++j) A[size_t(i * kMaxDim + k + j)] = v[size_t(i * m + j)];
      ++local[power_ranks(A, n, p, inv, true)];
    });
    return local;
  };
  std::vector<Local> parts;
  if (free == 0)
    parts.push_back(body(0));
  else
    parts = split_first<Local>(p, budget.threads, body);
  Tally t;
  for (const auto& part : parts)
    for (const auto& [ranks, c] : part) t[type_from_ranks(n, ranks)] += c;
  return t;
}

Int admissible_count_brute(const Partition& mu, const Partition& nu, int m, int p,
                           const Budget& budget) {
  Tally t = admissible_tally(nu, m, p, budget);
  auto it = t.find(mu);
  return it == t.end() ? Int(0) : it->second;
}

namespace {

// Vectors of F_p^n are coded in base p; subspaces are membership masks.
struct VectorSpace {
  int n, p, size;
  std::vector<std::vector<int>> digits;

  VectorSpace(int n_, int p_) : n(n_), p(p_), size(1) {
    for (int i = 0; i < n; ++i) size *= p;
    digits.resize(size_t(size));
    for (int c = 0; c < size; ++c) {
      int x = c;
      for (int i = 0; i < n; ++i) {
        digits[size_t(c)].push_back(x % p);
        x /= p;
      }
    }
  }
  int code(const std::vector<int>& d) const {
    int c = 0;
    for (int i = n - 1; i >= 0; --i) c = c * p + d[size_t(i)];
    return c;
  }
  int add(int a, int b, int scale) const {
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      d[size_t(i)] = (digits[size_t(a)][size_t(i)] + scale * digits[size_t(b)][size_t(i)]) % p;
    return code(d);
  }
  int apply(const MatrixFp& M, int v) const {
    std::vector<int> d(size_t(n), 0);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += M(i, j) * digits[size_t(v)][size_t(j)];
      d[size_t(i)] = s % p;
    }
    return code(d);
  }
};

using Mask = std::vector<char>;

Int count_flags(int n, int p, const std::function<bool(const std::vector<Mask>&)>& accept_level,
                const Budget& budget) {
  (void)budget;
  if (std::pow(double(p), n) > 4096)
    throw BudgetExceeded("flag enumeration: F_" + std::to_string(p) + "^" + std::to_string(n) +
                             " has more than 4096 vectors",
                         int_pow(p, n));
  VectorSpace V(n, p);
  std::vector<Mask> flag;
  Mask zero(size_t(V.size), 0);
  zero[0] = 1;
  flag.push_back(zero);
  Int total = 0;
  std::function<void()> rec = [&] {
    if (int(flag.size()) == n + 1) {
      ++total;
      return;
    }
    const Mask S = flag.back();
    std::set<Mask> seen;
    for (int v = 1; v < V.size; ++v) {
      if (S[size_t(v)]) continue;
      Mask T(size_t(V.size), 0);
      for (int s = 0; s < V.size; ++s)
        if (S[size_t(s)])
          for (int c = 0; c < p; ++c) T[size_t(V.add(s, v, c))] = 1;
      if (!seen.insert(T).second) continue;
      flag.push_back(T);
      if (accept_level(flag)) rec();
      flag.pop_back();
    }
  };
  rec();
  return total;
}

}  // namespace

Int flag_count_brute(int n, int p) {
  return count_flags(n, p, [](const std::vector<Mask>&) { return true; }, Budget{});
}

Int hess_variety_count_brute(const HessenbergFunction& h, const Partition& mu, int p,
                             const Budget& budget) {
  const int n = h.n();
  if (mu.size() != n) throw std::invalid_argument("hess_variety_count_brute: size mismatch");
  std::vector<int> e = e_function(h);
  MatrixFp J = MatrixFp::jordan(p, mu);
  VectorSpace V(n, p);
  std::vector<int> image(size_t(V.size));
  for (int v = 0; v < V.size; ++v) image[size_t(v)] = V.apply(J, v);
  return count_flags(
      n, p,
      [&](const std::vector<Mask>& flag) {
        const int i = int(flag.size()) - 1;
        const Mask& Vi = flag.back();
        const Mask& target = flag[size_t(e[size_t(i - 1)])];
        for (int v = 0; v < V.size; ++v)
          if (Vi[size_t(v)] && !target[size_t(image[size_t(v)])]) return false;
        return true;
      },
      budget);
}

namespace {

Int gl_order(int n, int p) {
  Int r = 1;
  Int pn = int_pow(p, n);
  for (int i = 0; i < n; ++i) r *= pn - int_pow(p, i);
  return r;
}

struct MatrixCodec {
  int n, p;
  long total;
  MatrixCodec(int n_, int p_) : n(n_), p(p_), total(1) {
    for (int i = 0; i < n * n; ++i) total *= p;
  }
  void decode(long c, std::vector<int>& a) const {
    a.resize(size_t(n * n));
    for (int i = 0; i < n * n; ++i) {
      a[size_t(i)] = int(c % p);
      c /= p;
    }
  }
  long encode(const std::vector<int>& a) const {
    long c = 0;
    for (int i = n * n - 1; i >= 0; --i) c = c * p + a[size_t(i)];
    return c;
  }
};

void check_group(int n, int p, const Budget& budget, const std::string& what) {
  Int order = gl_order(n, p);
  if (order > budget.max_group_order)
    throw BudgetExceeded(what + ": |GL_" + std::to_string(n) + "(F_" + std::to_string(p) +
                             ")| = " + order.get_str() + " exceeds the group budget",
                         order);
}

}  // namespace

Int double_coset_count_brute(const HessenbergFunction& h1, const HessenbergFunction& h2, int p,
                             const Budget& budget) {
  const int n = h1.n();
  if (h2.n() != n) throw std::invalid_argument("double_coset_count_brute: size mismatch");
  check_group(n, p, budget, "double_coset_count_brute");
  MatrixCodec codec(n, p);
  const auto& inv = inverses(p);
  std::vector<char> state(size_t(codec.total), 0);  // 0 unseen, 1 invertible, 2 visited
  std::vector<int> a, work;
  for (long c = 0; c < codec.total; ++c) {
    codec.decode(c, a);
    work = a;
    if (eliminate(work.data(), n, n, n, p, inv) == n) state[size_t(c)] = 1;
  }
  auto left = free_positions(h1), right = free_positions(h2);
  Int orbits = 0;
  std::deque<long> queue;
  for (long start = 0; start < codec.total; ++start) {
    if (state[size_t(start)] != 1) continue;
    ++orbits;
    state[size_t(start)] = 2;
    queue.push_back(start);
    while (!queue.empty()) {
      long c = queue.front();
      queue.pop_front();
      codec.decode(c, a);
      // (I + E_ij) g adds row j to row i; g (I + E_ij) adds column i to column j
      for (const auto& [i, j] : left) {
        work = a;
        for (int t = 0; t < n; ++t)
          work[size_t(i * n + t)] = (work[size_t(i * n + t)] + a[size_t(j * n + t)]) % p;
        long d = codec.encode(work);
        if (state[size_t(d)] == 1) {
          state[size_t(d)] = 2;
          queue.push_back(d);
        }
      }
      for (const auto& [i, j] : right) {
        work = a;
        for (int t = 0; t < n; ++t)
          work[size_t(t * n + j)] = (work[size_t(t * n + j)] + a[size_t(t * n + i)]) % p;
        long d = codec.encode(work);
        if (state[size_t(d)] == 1) {
          state[size_t(d)] = 2;
          queue.push_back(d);
        }
      }
    }
  }
  return orbits;
}

std::map<int, Int> count_x2_brute(const Partition& lambda, int p, const Budget& budget) {
  HessenbergFunction h = from_composition(lambda);
  const int n = h.n();
  auto pos = free_positions(h);
  const int free = int(pos.size());
  check_count(p, free, budget, "count_x2_brute");
  const auto& inv = inverses(p);
  std::map<int, Int> out;
  for (int first = 0; first < (free ? p : 1); ++first)
    odometer(p, free, first, [&](const std::vector<int>& v) {
      std::vector<int> X(size_t(n * n), 0);
      for (int k = 0; k < free; ++k) X[size_t(pos[size_t(k)].first * n + pos[size_t(k)].second)] = v[size_t(k)];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          int s = 0;
          for (int t = 0; t < n; ++t) s += X[size_t(i * n + t)] * X[size_t(t * n + j)];
          if (s % p) return;
        }
      std::vector<int> w = X;
      out[eliminate(w.data(), n, n, n, p, inv)] += 1;
    });
  return out;
}

Int centralizer_order_brute(const Partition& mu, int p, const Budget& budget) {
  const int n = mu.size();
  check_group(n, p, budget, "centralizer_order_brute");
  MatrixFp J = MatrixFp::jordan(p, mu);
  MatrixCodec codec(n, p);
  std::vector<int> a;
  Int count = 0;
  for (long c = 0; c < codec.total; ++c) {
    codec.decode(c, a);
    MatrixFp g(p, n, n);
    for (int i = 0; i < n * n; ++i) g.set(i / n, i % n, a[size_t(i)]);
    if (!(g * J == J * g)) continue;
    if (is_invertible(g)) ++count;
  }
  return count;
}

Int induced_char_brute(const HessenbergFunction& h, const Partition& mu, int p,
                       const Budget& budget) {
  const int n = h.n();
  check_group(n, p, budget, "induced_char_brute");
  MatrixFp J = MatrixFp::jordan(p, mu);
  MatrixCodec codec(n, p);
  std::vector<int> a;
  auto pos = free_positions(h);
  const int free = int(pos.size());
  std::vector<char> allowed(size_t(n * n), 0);
  for (const auto& [i, j] : pos) allowed[size_t(i * n + j)] = 1;
  Int hits = 0;
  for (long c = 0; c < codec.total; ++c) {
    codec.decode(c, a);
    MatrixFp g(p, n, n);
    for (int i = 0; i < n * n; ++i) g.set(i / n, i % n, a[size_t(i)]);
    MatrixFp gi(p, n, n);
    if (!inverse(g, &gi)) continue;
    MatrixFp Y = gi * J * g;
    bool inside = true;
    for (int i = 0; i < n * n && inside; ++i)
      if (!allowed[size_t(i)] && Y(i / n, i % n) != 0) inside = false;
    if (inside) ++hits;
  }
  Int uh = int_pow(p, free);
  if (hits % uh != 0) throw std::logic_error("induced_char_brute: count not divisible by |U_h|");
  return hits / uh;
}

}  // namespace jc
