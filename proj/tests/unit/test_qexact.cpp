#include <doctest.h>

#include <random>

#include "jc/qexact.hpp"

using namespace jc;

namespace {

IntLaurent random_laurent(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 5), low(-3, 3), coef(-4, 4);
  std::vector<long> c(size_t(len(rng)));
  for (auto& x : c) x = coef(rng);
  return IntLaurent::from_coeffs(c, low(rng));
}

// number of k-dimensional subspaces of F_q^n: count ordered bases and divide
Int subspaces(int n, int k, long q) {
  Int num = 1, den = 1;
  Int qn = 1, qk = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  for (int i = 0; i < k; ++i) qk *= q;
  Int qi = 1;
  for (int i = 0; i < k; ++i) {
    num *= qn - qi;
    den *= qk - qi;
    qi *= q;
  }
  return num / den;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
  IntLaurent qm1 = IntLaurent::from_coeffs({-1, 1});
  IntLaurent qp1 = IntLaurent::from_coeffs({1, 1});
  CHECK(qm1 * qp1 == IntLaurent::from_coeffs({-1, 0, 1}));
  CHECK((qm1 * qp1).exact_div(qm1) == qp1);
  CHECK(IntLaurent::q_pow(-2).degree() == -2);
  CHECK(IntLaurent().is_zero());
  CHECK(IntLaurent().degree() == IntLaurent::kMinusInfinity);
  CHECK((qm1 - qm1).is_zero());
  CHECK(qp1.pow(3) == IntLaurent::from_coeffs({1, 3, 3, 1}));

  IntLaurent quot;
  CHECK_FALSE(qp1.divides_by(IntLaurent::from_coeffs({0, 2}), &quot));
  CHECK_THROWS_AS(qp1.exact_div(IntLaurent::from_coeffs({1, 0, 1})), ArithmeticError);
}

TEST_CASE("laurent ring axioms on random samples") {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    IntLaurent a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(substitute_inverse(substitute_inverse(a)) == a);
    CHECK(substitute_inverse(a * b) == substitute_inverse(a) * substitute_inverse(b));
    CHECK(IntLaurent::parse(a.str()) == a);
    CHECK(IntLaurent::from_json(a.to_json()) == a);
    CHECK((a * b).eval(Rat(3, 2)) == a.eval(Rat(3, 2)) * b.eval(Rat(3, 2)));
    if (!b.is_zero()) CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("q-integers against their q = 1 and q = 2 values") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(q_factorial(n).eval_int(1) == factorial(n));
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k).eval_int(1) == binomial(n, k));
      CHECK(q_binomial(n, k).eval_int(2) == subspaces(n, k, 2));
      CHECK(q_binomial(n, k).eval_int(3) == subspaces(n, k, 3));
      CHECK(q_binomial(n, k).is_palindromic());
    }
  }
  CHECK(q_binomial(4, 2) == IntLaurent::from_coeffs({1, 1, 2, 1, 1}));
  CHECK(q_factorial_ratio(5, 3) == q_int(4) * q_int(5));
}

TEST_CASE("landsberg and pochhammer") {
  // ordered r-tuples of independent vectors in F_2^l
  for (int l = 0; l <= 5; ++l)
    for (int r = 0; r <= l; ++r) {
      Int want = 1, pw = 1, ql = Int(1) << l;
      for (int i = 0; i < r; ++i, pw *= 2) want *= ql - pw;
      CHECK(landsberg_C(l, r).eval_int(2) == want);
    }
  CHECK(q_pochhammer(2) == IntLaurent::from_coeffs({1, -1, -1, 1}));
  CHECK(root_multiplicity_at_one(q_minus_one_pow(3) * q_int(5)) == 3);
}

TEST_CASE("rational functions normalise") {
  QRational r(IntLaurent::from_coeffs({-1, 0, 1}), IntLaurent::from_coeffs({-1, 1}));
  CHECK(r.is_laurent());
  CHECK(r.to_laurent() == IntLaurent::from_coeffs({1, 1}));
  QRational s(IntLaurent(1), q_int(3));
  CHECK_FALSE(s.is_laurent());
  CHECK_THROWS_AS(s.to_laurent(), ArithmeticError);
  CHECK(s * QRational(q_int(3)) == QRational(1));
  CHECK(s.substitute_inverse().substitute_inverse() == s);
  CHECK(s.eval(2) == Rat(1, 7));
  CHECK_THROWS_AS(QRational(1) / QRational(), DivisionByZero);
  CHECK(poly_gcd(q_int(6), q_int(4)) == q_int(2));
}
