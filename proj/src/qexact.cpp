#include "jc/qexact.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <sstream>

namespace jc {

IntLaurent::IntLaurent(long c) {
  if (c != 0) c_.emplace_back(c);
}

IntLaurent::IntLaurent(const Int& c) {
  if (c != 0) c_.push_back(c);
}

IntLaurent::IntLaurent(const std::map<int, Int>& terms) {
  if (terms.empty()) return;
  low_ = terms.begin()->first;
  c_.assign(size_t(terms.rbegin()->first - low_ + 1), Int(0));
  for (const auto& [e, v] : terms) c_[size_t(e - low_)] += v;
  trim();
}

IntLaurent IntLaurent::monomial(const Int& c, int e) {
  IntLaurent r;
  if (c != 0) {
    r.low_ = e;
    r.c_.push_back(c);
  }
  return r;
}

IntLaurent IntLaurent::from_coeffs(const std::vector<long>& c, int low) {
  IntLaurent r;
  r.low_ = low;
  for (long v : c) r.c_.emplace_back(v);
  r.trim();
  return r;
}

void IntLaurent::trim() {
  size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<Int>(c_.begin() + long(first), c_.begin() + long(last));
    low_ += int(first);
  }
}

Int IntLaurent::coeff(int e) const {
  if (is_zero() || e < low_ || e > degree()) return Int(0);
  return c_[size_t(e - low_)];
}

const Int& IntLaurent::leading() const {
  if (is_zero()) throw ArithmeticError("leading coefficient of zero");
  return c_.back();
}

const Int& IntLaurent::trailing() const {
  if (is_zero()) throw ArithmeticError("trailing coefficient of zero");
  return c_.front();
}

std::map<int, Int> IntLaurent::terms() const {
  std::map<int, Int> m;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) m.emplace(low_ + int(i), c_[i]);
  return m;
}

size_t IntLaurent::num_terms() const {
  return size_t(std::count_if(c_.begin(), c_.end(), [](const Int& v) { return v != 0; }));
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(degree(), o.degree());
  if (lo < low_) {
    c_.insert(c_.begin(), size_t(low_ - lo), Int(0));
    low_ = lo;
  }
  if (int(c_.size()) < hi - lo + 1) c_.resize(size_t(hi - lo + 1), Int(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[size_t(o.low_ - low_) + i] += o.c_[i];
  trim();
  return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) { return *this += -o; }

IntLaurent IntLaurent::operator-() const {
  IntLaurent r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
  IntLaurent r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

IntLaurent& IntLaurent::operator*=(const IntLaurent& o) { return *this = *this * o; }

IntLaurent& IntLaurent::operator*=(const Int& c) {
  if (c == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& v : c_) v *= c;
  return *this;
}

IntLaurent IntLaurent::shifted(int k) const {
  IntLaurent r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

IntLaurent IntLaurent::pow(unsigned k) const {
  IntLaurent r(1), b = *this;
  while (k) {
    if (k & 1u) r *= b;
    k >>= 1u;
    if (k) b *= b;
  }
  return r;
}

bool IntLaurent::is_palindromic() const {
  for (size_t i = 0, j = c_.size(); i < j; ++i, --j)
    if (c_[i] != c_[j - 1]) return false;
  return true;
}

bool IntLaurent::divides_by(const IntLaurent& b, IntLaurent* quotient) const {
  if (b.is_zero()) throw DivisionByZero("division by the zero polynomial");
  if (is_zero()) {
    if (quotient) *quotient = IntLaurent();
    return true;
  }
  const size_t db = b.c_.size() - 1;
  if (c_.size() - 1 < db) return false;
  std::vector<Int> r = c_;
  std::vector<Int> q(c_.size() - db, Int(0));
  const Int& lb = b.c_.back();
  for (size_t top = r.size(); top-- > db;) {
    if (r[top] == 0) continue;
    if (!mpz_divisible_p(r[top].get_mpz_t(), lb.get_mpz_t())) return false;
    Int f;
    mpz_divexact(f.get_mpz_t(), r[top].get_mpz_t(), lb.get_mpz_t());
    q[top - db] = f;
    for (size_t j = 0; j <= db; ++j)
      mpz_submul(r[top - db + j].get_mpz_t(), f.get_mpz_t(), b.c_[j].get_mpz_t());
  }
  for (size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  if (quotient) {
    IntLaurent res;
    res.low_ = low_ - b.low_;
    res.c_ = std::move(q);
    res.trim();
    *quotient = std::move(res);
  }
  return true;
}

IntLaurent IntLaurent::exact_div(const IntLaurent& b) const {
  IntLaurent q;
  if (!divides_by(b, &q))
    throw ArithmeticError("inexact division: (" + str() + ") / (" + b.str() + ")");
  return q;
}

Int IntLaurent::content() const {
  Int g = 0;
  for (const auto& v : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntLaurent IntLaurent::divided_by_scalar(const Int& c) const {
  if (c == 0) throw DivisionByZero("division of a polynomial by 0");
  IntLaurent r = *this;
  for (auto& v : r.c_) {
    if (!mpz_divisible_p(v.get_mpz_t(), c.get_mpz_t()))
      throw ArithmeticError("inexact scalar division");
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

Rat IntLaurent::eval(const Rat& q0) const {
  if (is_zero()) return Rat(0);
  if (q0 == 0 && low_ < 0) throw DivisionByZero("negative power of q evaluated at 0");
  Rat acc = 0;
  for (size_t i = c_.size(); i-- > 0;) acc = acc * q0 + Rat(c_[i]);
  Rat p = 1;
  Rat base = low_ >= 0 ? q0 : Rat(1) / q0;
  for (int k = 0; k < std::abs(low_); ++k) p *= base;
  acc *= p;
  acc.canonicalize();
  return acc;
}

Int IntLaurent::eval_int(long q0) const {
  Rat v = eval(Rat(q0));
  if (v.get_den() != 1) throw ArithmeticError("non-integer value at integer point");
  return v.get_num();
}

std::vector<Int> IntLaurent::poly_coeffs() const {
  if (!is_polynomial()) throw ArithmeticError("not a polynomial: " + str());
  if (is_zero()) return {};
  std::vector<Int> r(size_t(low_), Int(0));
  r.insert(r.end(), c_.begin(), c_.end());
  return r;
}

namespace {

std::string monomial_str(int e) {
  if (e == 1) return "q";
  return "q^" + std::to_string(e);
}

}  // namespace

std::string IntLaurent::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Int& v = c_[i];
    if (v == 0) continue;
    int e = low_ + int(i);
    Int a = abs(v);
    if (first) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += monomial_str(e);
    }
  }
  return out;
}

IntLaurent IntLaurent::parse(const std::string& s) {
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i < s.size() && s[i] == '{') return from_json(nlohmann::json::parse(s));
  std::map<int, Int> terms;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto fail = [&](const char* what) {
    throw std::invalid_argument(std::string("cannot parse polynomial '") + s + "': " + what);
  };
  auto read_int = [&]() -> std::string {
    size_t j = i;
    if (j < s.size() && (s[j] == '-' || s[j] == '+')) ++j;
    size_t digits = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == digits) fail("expected digits");
    std::string t = s.substr(i, j - i);
    i = j;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  skip();
  if (i == s.size()) fail("empty input");
  bool first = true;
  while (true) {
    skip();
    if (i == s.size()) break;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    Int c = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = Int(read_int());
      have_coeff = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      }
    }
    int e = 0;
    if (i < s.size() && s[i] == 'q') {
      ++i;
      e = 1;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        skip();
        e = std::stoi(read_int());
      }
    } else if (!have_coeff) {
      fail("expected a term");
    }
    terms[e] += sign * c;
  }
  return IntLaurent(terms);
}

nlohmann::json IntLaurent::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    std::string key = std::to_string(low_ + int(i));
    if (c_[i].fits_slong_p())
      j[key] = c_[i].get_si();
    else
      j[key] = c_[i].get_str();
  }
  return j;
}

IntLaurent IntLaurent::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("polynomial JSON must be an object");
  std::map<int, Int> terms;
  for (const auto& [k, v] : j.items()) {
    int e = std::stoi(k);
    if (v.is_number_integer())
      terms[e] += Int(std::to_string(v.get<long long>()));
    else if (v.is_string())
      terms[e] += Int(v.get<std::string>());
    else
      throw std::invalid_argument("polynomial coefficient must be an integer or digit string");
  }
  return IntLaurent(terms);
}

IntLaurent substitute_inverse(const IntLaurent& p) {
  auto t = p.terms();
  std::map<int, Int> r;
  for (const auto& [e, v] : t) r.emplace(-e, v);
  return IntLaurent(r);
}

Rat eval_rational(const IntLaurent& p, const Rat& q0) { return p.eval(q0); }

int root_multiplicity_at_one(const IntLaurent& p) {
  if (p.is_zero()) throw ArithmeticError("multiplicity of a root of the zero polynomial");
  static const IntLaurent qm1 = IntLaurent::from_coeffs({-1, 1});
  int k = 0;
  IntLaurent cur = p, next;
  while (cur.divides_by(qm1, &next)) {
    cur = next;
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// polynomial gcd

namespace {

IntLaurent primitive_part(const IntLaurent& a) {
  if (a.is_zero()) return a;
  IntLaurent r = a.divided_by_scalar(a.content());
  if (r.leading() < 0) r = -r;
  return r;
}

// pseudo-remainder of a by b, both with low() == 0
IntLaurent pseudo_rem(IntLaurent a, const IntLaurent& b) {
  const Int lb = b.leading();
  const int db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    Int la = a.leading();
    int shift = a.degree() - db;
    a *= lb;
    IntLaurent t = b;
    t *= la;
    a -= t.shifted(shift);
  }
  return a;
}

}  // namespace

IntLaurent poly_gcd(IntLaurent a, IntLaurent b) {
  if (!a.is_zero()) a = a.shifted(-a.low());
  if (!b.is_zero()) b = b.shifted(-b.low());
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return IntLaurent(1);
    IntLaurent r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return a;
}

// ---------------------------------------------------------------------------
// QRational

QRational::QRational(const Rat& r) : num_(Int(r.get_num())), den_(Int(r.get_den())) {}

QRational::QRational(const IntLaurent& num, const IntLaurent& den) : num_(num), den_(den) {
  normalize();
}

void QRational::normalize() {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntLaurent(1);
    return;
  }
  if (den_.low() != 0) {
    int s = den_.low();
    den_ = den_.shifted(-s);
    num_ = num_.shifted(-s);
  }
  if (den_.degree() > 0) {
    IntLaurent g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
  }
  Int c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    num_ = num_.divided_by_scalar(c);
    den_ = den_.divided_by_scalar(c);
  }
}

IntLaurent QRational::to_laurent() const {
  if (!is_laurent()) throw ArithmeticError("expected a Laurent polynomial, got " + str());
  return num_;
}

QRational& QRational::operator+=(const QRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!is_laurent()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRational& QRational::operator-=(const QRational& o) { return *this += -o; }

QRational& QRational::operator*=(const QRational& o) {
  if (is_zero() || o.is_zero()) return *this = QRational();
  const bool simple = is_laurent() && o.is_laurent();
  num_ *= o.num_;
  den_ *= o.den_;
  if (!simple) normalize();
  return *this;
}

QRational QRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return QRational(den_, num_);
}

QRational& QRational::operator/=(const QRational& o) { return *this *= o.inverse(); }

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational QRational::substitute_inverse() const {
  return QRational(jc::substitute_inverse(num_), jc::substitute_inverse(den_));
}

Rat QRational::eval(const Rat& q0) const {
  Rat d = den_.eval(q0);
  if (d == 0) throw DivisionByZero("evaluation at a root of the denominator");
  Rat r = num_.eval(q0) / d;
  r.canonicalize();
  return r;
}

Rat eval_rational(const QRational& p, const Rat& q0) { return p.eval(q0); }

std::string QRational::str() const {
  if (is_laurent()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// q-combinatorics

IntLaurent q_int(int n) {
  if (n < 0) throw std::invalid_argument("q_int: negative argument");
  std::vector<long> c(size_t(n), 1);
  return IntLaurent::from_coeffs(c);
}

IntLaurent q_factorial_ratio(int a, int b) {
  if (b < 0 || a < b) throw std::invalid_argument("q_factorial_ratio: need 0 <= b <= a");
  IntLaurent r(1);
  for (int i = b + 1; i <= a; ++i) r *= q_int(i);
  return r;
}

IntLaurent q_factorial(int n) {
  static std::mutex mu;
  static std::vector<IntLaurent> cache{IntLaurent(1)};
  if (n < 0) throw std::invalid_argument("q_factorial: negative argument");
  std::lock_guard<std::mutex> lock(mu);
  while (int(cache.size()) <= n) cache.push_back(cache.back() * q_int(int(cache.size())));
  return cache[size_t(n)];
}

IntLaurent q_binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("q_binomial: negative n");
  if (k < 0 || k > n) return IntLaurent();
  static std::mutex mu;
  static std::map<std::pair<int, int>, IntLaurent> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  IntLaurent num = q_factorial(n);
  IntLaurent den = q_factorial(k) * q_factorial(n - k);
  IntLaurent r;
  if (!num.divides_by(den, &r))
    throw ArithmeticError("q_binomial: nonzero remainder for n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(std::make_pair(n, k), r);
  return r;
}

IntLaurent q_pochhammer(int n) {
  IntLaurent r(1);
  for (int i = 1; i <= n; ++i) r *= IntLaurent(1) - IntLaurent::q_pow(i);
  return r;
}

IntLaurent q_minus_one_pow(int k) {
  if (k < 0) throw std::invalid_argument("q_minus_one_pow: negative exponent");
  return IntLaurent::from_coeffs({-1, 1}).pow(unsigned(k));
}

IntLaurent landsberg_C(int l, int r) {
  if (r < 0 || l < 0 || r > l) throw std::invalid_argument("landsberg_C: need 0 <= r <= l");
  IntLaurent prod(1);
  for (int i = 0; i < r; ++i) prod *= IntLaurent::q_pow(l) - IntLaurent::q_pow(i);
  IntLaurent alt = q_minus_one_pow(r) * q_factorial(r) * q_binomial(l, r);
  alt = alt.shifted(r * (r - 1) / 2);
  if (alt != prod) throw ArithmeticError("landsberg_C: product and closed form disagree");
  return prod;
}

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

}  // namespace jc
