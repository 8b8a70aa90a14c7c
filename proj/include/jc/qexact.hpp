#pragma once

#include <climits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace jc {

using Int = mpz_class;
using Rat = mpq_class;

// Raised when an exact division that must succeed leaves a remainder.
class ArithmeticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Laurent polynomial in q with big-integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has
/// no coefficients at all.
class IntLaurent {
 public:
  static constexpr int kMinusInfinity = INT_MIN;

  IntLaurent() = default;
  IntLaurent(long c);  // NOLINT(google-explicit-constructor)
  IntLaurent(const Int& c);  // NOLINT(google-explicit-constructor)
  explicit IntLaurent(const std::map<int, Int>& terms);

  static IntLaurent monomial(const Int& c, int e);
  static IntLaurent q_pow(int e) { return monomial(Int(1), e); }
  // Ascending coefficients c[0] + c[1] q + ...
  static IntLaurent from_coeffs(const std::vector<long>& c, int low = 0);

  bool is_zero() const { return c_.empty(); }
  bool is_polynomial() const { return is_zero() || low_ >= 0; }
  bool is_constant() const { return is_zero() || (low_ == 0 && c_.size() == 1); }
  // Lowest and highest exponents; kMinusInfinity for zero.
  int low() const { return is_zero() ? kMinusInfinity : low_; }
  int degree() const { return is_zero() ? kMinusInfinity : low_ + int(c_.size()) - 1; }
  Int coeff(int e) const;
  const Int& leading() const;
  const Int& trailing() const;
  std::map<int, Int> terms() const;
  size_t num_terms() const;

  IntLaurent& operator+=(const IntLaurent& o);
  IntLaurent& operator-=(const IntLaurent& o);
  IntLaurent& operator*=(const IntLaurent& o);
  IntLaurent& operator*=(const Int& c);
  IntLaurent operator-() const;
  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  friend bool operator==(const IntLaurent& a, const IntLaurent& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const IntLaurent& a, const IntLaurent& b) { return !(a == b); }

  // Multiply by q^k.
  IntLaurent shifted(int k) const;
  IntLaurent pow(unsigned k) const;
  bool is_palindromic() const;

  // Exact division in Z[q, 1/q]; returns false when b does not divide *this.
  bool divides_by(const IntLaurent& b, IntLaurent* quotient) const;
  IntLaurent exact_div(const IntLaurent& b) const;

  // gcd of all coefficients, always >= 0
  Int content() const;
  IntLaurent divided_by_scalar(const Int& c) const;

  Rat eval(const Rat& q0) const;
  Int eval_int(long q0) const;

  // Coefficient vector c[0..deg] for polynomials (low() >= 0).
  std::vector<Int> poly_coeffs() const;

  std::string str() const;
  static IntLaurent parse(const std::string& s);
  nlohmann::json to_json() const;
  static IntLaurent from_json(const nlohmann::json& j);

 private:
  int low_ = 0;
  std::vector<Int> c_;
  void trim();
};

IntLaurent substitute_inverse(const IntLaurent& p);
Rat eval_rational(const IntLaurent& p, const Rat& q0);

// Multiplicity of q = 1 as a root; p must be nonzero.
int root_multiplicity_at_one(const IntLaurent& p);

/// Element of Q(q), kept as num/den with den a polynomial with nonzero
/// constant term, gcd(num, den) = 1 and the joint content removed.
class QRational {
 public:
  QRational() : den_(1) {}
  QRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const Int& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const IntLaurent& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  QRational(const Rat& r);  // NOLINT(google-explicit-constructor)
  QRational(const IntLaurent& num, const IntLaurent& den);

  const IntLaurent& num() const { return num_; }
  const IntLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == IntLaurent(1); }
  // Throws ArithmeticError unless the denominator is 1.
  IntLaurent to_laurent() const;

  QRational& operator+=(const QRational& o);
  QRational& operator-=(const QRational& o);
  QRational& operator*=(const QRational& o);
  QRational& operator/=(const QRational& o);
  QRational operator-() const;
  QRational inverse() const;
  friend QRational operator+(QRational a, const QRational& b) { return a += b; }
  friend QRational operator-(QRational a, const QRational& b) { return a -= b; }
  friend QRational operator*(QRational a, const QRational& b) { return a *= b; }
  friend QRational operator/(QRational a, const QRational& b) { return a /= b; }
  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

  QRational substitute_inverse() const;
  Rat eval(const Rat& q0) const;
  std::string str() const;

 private:
  IntLaurent num_, den_;
  void normalize();
};

Rat eval_rational(const QRational& p, const Rat& q0);

// gcd over Q[q] of two polynomials, primitive with positive leading coefficient.
IntLaurent poly_gcd(IntLaurent a, IntLaurent b);

// [n]_q, [n]_q!, Gaussian binomials and friends.
IntLaurent q_int(int n);
IntLaurent q_factorial(int n);
// [a]!/[b]! for a >= b
IntLaurent q_factorial_ratio(int a, int b);
IntLaurent q_binomial(int n, int k);
// (q;q)_n = (1-q)(1-q^2)...(1-q^n)
IntLaurent q_pochhammer(int n);
// (q^l - 1)(q^l - q)...(q^l - q^{r-1})
IntLaurent landsberg_C(int l, int r);
// (q - 1)^k
IntLaurent q_minus_one_pow(int k);

Int binomial(long n, long k);
Int factorial(long n);

}  // namespace jc
