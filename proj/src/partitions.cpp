#include "jc/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace jc {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::rectangle(int a, int k) { return Partition(std::vector<int>(size_t(k), a)); }

Partition Partition::hook(int n, int k) {
  std::vector<int> p{k + 1};
  for (int i = 0; i < n - k - 1; ++i) p.push_back(1);
  return Partition(p);
}

int Partition::multiplicity(int i) const {
  return int(std::count(parts_.begin(), parts_.end(), i));
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

int Composition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Composition::sorted() const {
  std::vector<int> p = parts;
  std::sort(p.rbegin(), p.rend());
  return Partition(p);
}

std::string Composition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

Partition conjugate(const Partition& mu) {
  std::vector<int> c(size_t(mu[0]), 0);
  for (int part : mu.parts())
    for (int j = 0; j < part; ++j) ++c[size_t(j)];
  return Partition(c);
}

bool dominates(const Partition& mu, const Partition& nu) {
  if (mu.size() != nu.size()) throw std::invalid_argument("dominance needs equal sizes");
  int a = 0, b = 0;
  for (int i = 0; i < std::max(mu.length(), nu.length()); ++i) {
    a += mu[i];
    b += nu[i];
    if (a > b) return false;
  }
  return true;
}

int n_stat(const Partition& mu) {
  int s1 = 0;
  for (int i = 0; i < mu.length(); ++i) s1 += i * mu[i];
  int s2 = 0;
  const Partition conj = conjugate(mu);
  for (int c : conj.parts()) s2 += c * (c - 1) / 2;
  if (s1 != s2) throw std::logic_error("n_stat: the two defining sums disagree");
  return s1;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

std::vector<Partition> partitions_of(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int mx) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, mx); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, max_part);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int rem) {
    if (rem == 0) {
      out.push_back({cur});
      return;
    }
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Composition> rearrangements(const Partition& lambda) {
  std::vector<int> p = lambda.parts();
  std::sort(p.begin(), p.end());
  std::vector<Composition> out;
  do {
    out.push_back({p});
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

bool is_horizontal_strip(const Partition& eta, const Partition& rho) {
  if (!contains(eta, rho)) return false;
  for (int i = 0; i < eta.length(); ++i)
    if (eta[i + 1] > rho[i]) return false;
  return true;
}

IntLaurent theta(const Partition& eta, const Partition& rho) {
  if (!is_horizontal_strip(eta, rho)) throw std::invalid_argument("theta: not a horizontal strip");
  IntLaurent r = q_factorial_ratio(eta.size() - rho.size(), eta[0] - rho[0]);
  for (int i = 0; i < eta.length(); ++i) r *= q_binomial(rho[i] - rho[i + 1], eta[i + 1] - rho[i + 1]);
  return r;
}

IntLaurent psi(const Partition& eta, const Partition& rho) {
  if (!is_horizontal_strip(eta, rho)) throw std::invalid_argument("psi: not a horizontal strip");
  IntLaurent r(1);
  for (int i = 0; i < eta.length(); ++i) r *= q_binomial(eta[i] - eta[i + 1], eta[i] - rho[i]);
  return r;
}

namespace {

// Horizontal strips eta/rho of size k with eta ⊆ mu.
void extend_strips(const Partition& rho, const Partition& mu, int k,
                   const std::function<void(const Partition&)>& emit) {
  std::vector<int> eta;
  const int rows = std::min(rho.length() + 1, mu.length());
  std::function<void(int, int)> rec = [&](int i, int rem) {
    if (i == rows) {
      if (rem == 0) emit(Partition(eta));
      return;
    }
    int lo = rho[i];
    int hi = std::min(mu[i], i == 0 ? mu[0] : rho[i - 1]);
    // only the row just below rho can start empty, and it is the last one
    for (int v = lo; v <= hi && v - lo <= rem; ++v) {
      eta.push_back(v);
      rec(i + 1, rem - (v - lo));
      eta.pop_back();
    }
  };
  rec(0, k);
}

}  // namespace

std::vector<StripChain> strip_chains(const Partition& mu, const std::vector<int>& content) {
  int total = std::accumulate(content.begin(), content.end(), 0);
  if (total != mu.size()) throw std::invalid_argument("strip_chains: sizes differ");
  std::vector<StripChain> out;
  StripChain cur{Partition()};
  std::function<void(size_t)> rec = [&](size_t j) {
    if (j == content.size()) {
      if (cur.back() == mu) out.push_back(cur);
      return;
    }
    const Partition base = cur.back();
    extend_strips(base, mu, content[j], [&](const Partition& eta) {
      cur.push_back(eta);
      rec(j + 1);
      cur.pop_back();
    });
  };
  rec(0);
  return out;
}

IntLaurent coeff_b(const Partition& mu, const Partition& lambda) {
  IntLaurent sum;
  for (const auto& ch : strip_chains(mu, lambda)) {
    IntLaurent prod(1);
    for (size_t j = 1; j < ch.size(); ++j) prod *= theta(ch[j], ch[j - 1]);
    sum += prod;
  }
  return sum;
}

IntLaurent coeff_a(const Partition& mu, const Partition& lambda) {
  IntLaurent sum;
  for (const auto& ch : strip_chains(mu, lambda)) {
    IntLaurent prod(1);
    for (size_t j = 1; j < ch.size(); ++j) prod *= psi(ch[j], ch[j - 1]);
    sum += prod;
  }
  return sum;
}

long kostka(const Partition& shape, const std::vector<int>& content) {
  return long(strip_chains(shape, content).size());
}

IntLaurent q_factorial(const Partition& lambda) {
  IntLaurent r(1);
  for (int p : lambda.parts()) r *= q_factorial(p);
  return r;
}

Int z_rho(const Partition& rho) {
  Int z = 1;
  for (int i = 1; i <= rho[0]; ++i) {
    int m = rho.multiplicity(i);
    for (int k = 0; k < m; ++k) z *= i;
    z *= factorial(m);
  }
  return z;
}

nlohmann::json to_json(const Partition& p) { return nlohmann::json(p.parts()); }

Partition partition_from_json(const nlohmann::json& j) {
  return Partition(j.get<std::vector<int>>());
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::string tok;
  auto flush = [&] {
    if (!tok.empty()) {
      size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
      out.push_back(v);
      tok.clear();
    }
  };
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
    } else if ((c >= '0' && c <= '9') || c == '-') {
      tok += c;
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + c + "' in list");
    }
  }
  flush();
  return out;
}

}  // namespace jc
