#include <doctest.h>

#include "jc/formulas.hpp"
#include "jc/symfunc.hpp"

using namespace jc;

namespace {

const Basis kAll[] = {Basis::M, Basis::E, Basis::H, Basis::P, Basis::S};

SymPoly sample(int n) {
  SymPoly f(n, Basis::S);
  int i = 1;
  for (const auto& lam : partitions_of(n)) f.add(lam, QRational(IntLaurent::from_coeffs({i, -1}, i % 3 - 1))), ++i;
  return f;
}

}  // namespace

TEST_CASE("basis names") {
  for (Basis b : kAll) CHECK(basis_from_name(basis_name(b)) == b);
  CHECK_THROWS(basis_from_name("q"));
}

TEST_CASE("elementary transitions") {
  for (int n = 1; n <= 6; ++n) {
    const Partition ones(std::vector<int>(size_t(n), 1));
    for (const auto& mu : partitions_of(n)) {
      CHECK(transition_coeff(Basis::E, Partition{n}, mu) == (mu == ones ? 1 : 0));
      CHECK(transition_coeff(Basis::H, Partition{n}, mu) == 1);
      CHECK(transition_coeff(Basis::P, Partition{n}, mu) == (mu == Partition{n} ? 1 : 0));
      for (const auto& lam : partitions_of(n)) CHECK(transition_coeff(Basis::S, lam, mu) == kostka(lam, mu));
    }
  }
}

TEST_CASE("conversions round-trip and omega is an involution") {
  for (int n = 1; n <= 6; ++n) {
    SymPoly f = sample(n);
    for (Basis b : kAll) {
      SymPoly g = convert(f, b);
      CHECK(convert(g, Basis::S) == f);
      CHECK(convert(omega(omega(g)), Basis::S) == f);
    }
    for (const auto& lam : partitions_of(n))
      CHECK(convert(omega(SymPoly::element(Basis::S, lam)), Basis::S) == SymPoly::element(Basis::S, conjugate(lam)));
  }
}

TEST_CASE("Hall inner product") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& a : partitions_of(n))
      for (const auto& b : partitions_of(n)) {
        const QRational d = a == b ? 1 : 0;
        CHECK(hall_inner(SymPoly::element(Basis::H, a), SymPoly::element(Basis::M, b)) == d);
        CHECK(hall_inner(SymPoly::element(Basis::S, a), SymPoly::element(Basis::S, b)) == d);
        CHECK(hall_inner(SymPoly::element(Basis::P, a), SymPoly::element(Basis::P, b)) ==
              (a == b ? QRational(z_rho(a)) : QRational(0)));
      }
}

TEST_CASE("products of monomials") {
  auto f = hall_f1(Partition{1}, Partition{1});
  CHECK(f.at(Partition{2}) == 1);
  CHECK(f.at(Partition{1, 1}) == 2);
  SymPoly prod = multiply(SymPoly::element(Basis::E, Partition{1}), SymPoly::element(Basis::E, Partition{1}));
  CHECK(prod == convert(SymPoly::element(Basis::E, Partition{1, 1}), Basis::M));
}

TEST_CASE("chromatic quasisymmetric functions of extreme graphs") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> path, full(size_t(n), n);
    for (int i = 1; i <= n; ++i) path.push_back(i);
    // no edges: (x_1 + x_2 + ...)^n
    SymPoly x = chromatic_qsf(HessenbergFunction(path));
    CHECK(convert(x, Basis::P) == SymPoly::element(Basis::P, Partition(std::vector<int>(size_t(n), 1))));
    // complete graph: [n]_q! e_n
    auto c = chromatic_e_coeffs(HessenbergFunction(full));
    CHECK(c.size() == 1);
    CHECK(c.at(Partition{n}) == q_factorial(n));
  }
}

TEST_CASE("chromatic e-coefficients are palindromic and positive") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      auto c = chromatic_e_coeffs(h);
      for (const auto& [lam, v] : c) {
        CHECK(v.is_palindromic());
        for (const auto& [e, coef] : v.terms()) CHECK(coef > 0);
      }
    }
}

TEST_CASE("Macdonald P at t = 0") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& mu : partitions_of(n)) {
      // at q = 0 it is the Schur function
      SymPoly p = macdonald_P0(mu);
      for (const auto& [lam, c] : p.terms())
        CHECK(c.num().eval_int(0) == kostka(mu, lam));
      // unitriangular on the monomial basis
      CHECK(p.coeff(mu) == QRational(1));
    }
}

TEST_CASE("two-row Macdonald identities") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      Partition mu = k ? Partition{n - k, k} : Partition{n};
      CHECK(convert(jing_jozefiak_Q(n, k), Basis::M) == macdonald_Q0(mu));
      CHECK(two_var_P(n, k) == restrict_to_two_vars(macdonald_P0(mu, true)));
    }
  CHECK(g_row(0).coeff(Partition()) == QRational(1));
  CHECK_THROWS(jing_jozefiak_Q(3, 2));
}

TEST_CASE("modified Hall-Littlewood pairing shortcut") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& h : enumerate_hessenberg(n)) {
      auto c = chromatic_e_coeffs(h);
      SymPoly x(n, Basis::E);
      for (const auto& [lam, v] : c) x.add(lam, v);
      for (const auto& mu : partitions_of(n))
        CHECK(hall_inner(modified_HL(mu), x) == modified_HL_inner_e(mu, c));
    }
}

TEST_CASE("json layout") {
  auto j = SymPoly::element(Basis::E, Partition{2, 1}).to_json();
  CHECK(j["basis"] == "E");
  CHECK(j["degree"] == 3);
  CHECK(j["terms"].size() == 1);
}
