#include <doctest.h>

#include "contactlab/catalog.hpp"
#include "contactlab/contact.hpp"
#include "contactlab/constructions.hpp"

using namespace contactlab;

TEST_CASE("contact condition and Reeb vector") {
  auto df = catalog_find("diatta_foreman");
  CHECK(is_contact(df->algebra, *df->contact_form));
  Vec reeb = reeb_vector(df->algebra, *df->contact_form);
  Vec expected{Rational(1, 3), Rational(1, 3), Rational(1, 3), Rational(0), Rational(0)};
  CHECK(reeb == expected);

  // abelian R^3: every 1-form has d eta = 0, never contact
  LieAlgebra ab = LieAlgebra::abelian(3);
  Vec c{Rational(1), Rational(1), Rational(1)};
  CHECK_FALSE(is_contact(ab, KForm::one_form(c)));
  CHECK_THROWS_WITH_AS(reeb_vector(ab, KForm::one_form(c)), "degenerate: Reeb system singular",
                       std::domain_error);
  CHECK_THROWS_AS(is_contact(LieAlgebra::abelian(2), KForm::basis_dual(2, 0)), std::invalid_argument);

  // g1-: eta = xi^*, Reeb is the xi basis vector
  auto g1m = catalog_find("g1_minus");
  CHECK(reeb_vector(g1m->algebra, *g1m->contact_form) == g1m->algebra.basis_vector(0));
}

TEST_CASE("transverse unimodularity") {
  SUBCASE("Diatta-Foreman is transversely unimodular") {
    auto df = catalog_find("diatta_foreman");
    ContactStructure c = make_contact(df->algebra, *df->contact_form);
    CHECK(is_transversely_unimodular(c).transversely_unimodular);
  }
  SUBCASE("g1- fails with witness x, trace 2") {
    auto e = catalog_find("g1_minus");
    ContactStructure c = make_contact(e->algebra, *e->contact_form);
    TransverseVerdict v = is_transversely_unimodular(c);
    CHECK_FALSE(v.transversely_unimodular);
    REQUIRE(v.witness.has_value());
    CHECK(*v.witness == e->algebra.basis_vector(1));  // x
    CHECK(v.witness_trace == Rational(2));
  }
  SUBCASE("contactization of a unimodular symplectic algebra") {
    // R^4 abelian with the standard form: ad_xi = 0 and M_x = ad_x|_h = 0.
    LieAlgebra r4 = LieAlgebra::abelian(4);
    KForm omega(4, 2);
    omega.add_term({0, 1}, Rational(1));
    omega.add_term({2, 3}, Rational(1));
    ContactStructure c = contactize(make_symplectic(r4, omega));
    CHECK(is_transversely_unimodular(c).transversely_unimodular);
  }
}

TEST_CASE("basic complex") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    ContactStructure c = make_contact(e.algebra, *e.contact_form);
    // omega is basic in every contact structure
    CHECK(c.omega.interior(c.reeb).is_zero());
    CHECK(lie_derivative(e.algebra, c.reeb, c.omega).is_zero());
    auto complex_basis = basic_complex(c);  // asserts d preserves the subcomplex
    CHECK(complex_basis.size() == static_cast<std::size_t>(e.algebra.dim()) + 1);
  }
  SUBCASE("h3 basic complex is the pullback of forms on R^2") {
    auto h = catalog_find("h3");
    ContactStructure c = make_contact(h->algebra, *h->contact_form);
    auto complex_basis = basic_complex(c);
    CHECK(complex_basis[0].size() == 1);
    CHECK(complex_basis[1].size() == 2);  // e^1, e^2
    CHECK(complex_basis[2].size() == 1);  // e^12
    CHECK(complex_basis[3].size() == 0);
    CHECK(basic_betti(c) == std::vector<int>{1, 2, 1, 0});
  }
}

TEST_CASE("top basic Betti detects transverse unimodularity") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    ContactStructure c = make_contact(e.algebra, *e.contact_form);
    int top = e.algebra.dim() - 1;  // 2n
    bool top_nonzero = basic_betti(c)[top] != 0;
    CHECK(top_nonzero == is_transversely_unimodular(c).transversely_unimodular);
  }
}

TEST_CASE("xi-in-commutator equivalences") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    CHECK(xi_commutator_equivalences(make_contact(e.algebra, *e.contact_form)).agree());
  }
  SUBCASE("converse example 1: all three hold") {
    auto e = catalog_find("converse_1");
    auto xc = xi_commutator_equivalences(make_contact(e->algebra, *e->contact_form));
    CHECK(xc.in_commutator);
    CHECK(xc.every_h1_class_has_basic_rep);
    CHECK(xc.omega_basic_class_nonzero);
  }
  SUBCASE("contactization of an exact symplectic algebra: all three fail") {
    FrobeniusInput f = frobenius_aff();
    ContactStructure c = contactize(f.symplectic);
    auto xc = xi_commutator_equivalences(c);
    CHECK_FALSE(xc.in_commutator);
    CHECK_FALSE(xc.every_h1_class_has_basic_rep);
    CHECK_FALSE(xc.omega_basic_class_nonzero);
  }
  SUBCASE("h3: omega spans H^2 of R^2, all three hold") {
    auto h = catalog_find("h3");
    auto xc = xi_commutator_equivalences(make_contact(h->algebra, *h->contact_form));
    CHECK(xc.in_commutator);
    CHECK(xc.every_h1_class_has_basic_rep);
    CHECK(xc.omega_basic_class_nonzero);
  }
}
