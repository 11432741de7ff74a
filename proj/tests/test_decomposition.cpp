#include <doctest.h>

#include "contactlab/catalog.hpp"
#include "contactlab/decomposition.hpp"

using namespace contactlab;

TEST_CASE("g1- decomposition against the worked values") {
  auto e = catalog_find("g1_minus");
  ContactStructure c = make_contact(e->algebra, *e->contact_form);
  ContactDecomposition d = decompose(c);

  // basis {xi,x,y,u,v}: t0 = span{x,y}, q = span{u,v}
  CHECK(d.t0 == Subspace::span(5, {e->algebra.basis_vector(1), e->algebra.basis_vector(2)}));
  CHECK(d.q == Subspace::span(5, {e->algebra.basis_vector(3), e->algebra.basis_vector(4)}));
  CHECK(d.ds);

  Matrix expected_a(2, 2);
  expected_a(0, 0) = Rational(1);
  expected_a(1, 1) = Rational(-1);
  CHECK(d.A == expected_a);

  // rho(x) = Id/2, rho(y) = -A
  Matrix half_id = Rational(1, 2) * Matrix::identity(2);
  CHECK(d.rho[0] == half_id);
  CHECK(d.rho[1] == -expected_a);

  // beta(u,v) = y, gamma = 0
  CHECK(d.beta[0][1] == Vec{Rational(0), Rational(1)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(is_zero_vec(d.gamma[i][j]));

  // ell(x) = tr(A^-1 rho(x))/2 = 0, ell(y) = tr(A^-1 (-A))/2 = -1
  REQUIRE(d.ell.has_value());
  CHECK(*d.ell == Vec{Rational(0), Rational(-1)});
  // sigma = 0 in the DS case
  CHECK(d.sigma->is_zero());
  // e = x
  CHECK(*d.e == e->algebra.basis_vector(1));
}

TEST_CASE("q = 0 regimes carry the gate label") {
  auto h = catalog_find("h3");
  ContactDecomposition d = decompose(make_contact(h->algebra, *h->contact_form));
  CHECK(d.K.is_zero());
  CHECK(d.dim_q() == 0);
  CHECK(d.t.dim() == 3);
  REQUIRE(d.pipeline_gate.has_value());
  CHECK(*d.pipeline_gate == "K_s = 0: main-theorem pipeline not applicable");
  CHECK_FALSE(d.ell.has_value());
  WitnessResult w = witness_e(d);
  REQUIRE(w.gate.has_value());
  CHECK(*w.gate == "nilpotent-ad_xi regime");
}

TEST_CASE("t0 = 0 regime (sl2/su2)") {
  auto s = catalog_find("sl2");
  ContactDecomposition d = decompose(make_contact(s->algebra, *s->contact_form));
  CHECK(d.dim_t0() == 0);
  CHECK(d.dim_q() == 2);
  REQUIRE(d.pipeline_gate.has_value());
  WitnessResult w = witness_e(d);
  REQUIRE(w.gate.has_value());
  CHECK(*w.gate == "sl(2,R)/su(2) regime (t = R xi)");
}

TEST_CASE("gamma tensor of the section-3 example") {
  auto e = catalog_find("gamma_nonzero");
  ContactDecomposition d = decompose(make_contact(e->algebra, *e->contact_form));
  CHECK(d.dim_q() == 4);
  // q-basis is (e1,e2,e3,e4) in ambient indices 3..6; gamma(e3,e2) = e1.
  CHECK(d.q_basis[0] == e->algebra.basis_vector(3));
  CHECK(d.gamma[2][1] == Vec{Rational(1), Rational(0), Rational(0), Rational(0)});
  // beta(e1,e3) = y
  CHECK(d.beta[0][2] == Vec{Rational(0), Rational(1)});
}

TEST_CASE("decompose runs and validates on every contact catalog entry") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    CAPTURE(e.name);
    ContactDecomposition d = decompose(make_contact(e.algebra, *e.contact_form));
    CHECK(d.dim_t() + d.dim_q() == e.algebra.dim());
    CHECK(d.t.contains(d.contact.reeb));
  }
}

TEST_CASE("witness pipeline on every applicable entry") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    CAPTURE(e.name);
    ContactDecomposition d = decompose(make_contact(e.algebra, *e.contact_form));
    WitnessResult w = witness_e(d);
    if (w.gate) continue;
    CHECK(w.xi_bracket_e_zero);
    CHECK(w.interior_e_sigma_zero);
    CHECK(w.tr_t_equals_half_dim_t0);
    CHECK(w.tr_q_nonnegative);
    CHECK(w.tr_total_positive);
    CHECK(w.refutes_transverse_unimodularity);
  }
  SUBCASE("frozen traces for g1-") {
    auto e = catalog_find("g1_minus");
    WitnessResult w = witness_e(decompose(make_contact(e->algebra, *e->contact_form)));
    CHECK(w.e == e->algebra.basis_vector(1));
    CHECK(w.tr_t == Rational(1));
    CHECK(w.tr_q == Rational(1));
    CHECK(w.tr_total == Rational(2));
  }
  SUBCASE("g0- has the same trace profile") {
    auto e = catalog_find("g0_minus");
    WitnessResult w = witness_e(decompose(make_contact(e->algebra, *e->contact_form)));
    CHECK(w.tr_t == Rational(1));  // dim t0 / 2
    CHECK(w.tr_q >= Rational(0));
    CHECK(w.tr_total == Rational(2));
  }
}

TEST_CASE("ell properties verified exactly") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    CAPTURE(e.name);
    ContactDecomposition d = decompose(make_contact(e.algebra, *e.contact_form));
    EllVerdicts v = verify_ell_properties(d);
    if (!v.applicable) continue;
    CHECK(v.ell_circ_c_zero);
    CHECK(v.dt_ell_equals_omega_minus_sigma);
  }
}
