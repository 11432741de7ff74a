#include <doctest.h>

#include "contactlab/constructions.hpp"
#include "contactlab/fingerprint.hpp"
#include "contactlab/fuzz.hpp"
#include "contactlab/lie_algebra.hpp"
#include "contactlab/standard_algebras.hpp"

using namespace contactlab;

TEST_CASE("jacobi validation") {
  CHECK(LieAlgebra::abelian(4).validate_jacobi().empty());
  CHECK(sl2().validate_jacobi().empty());
  // one perturbed constant breaks it
  LieAlgebra bad = sl2();
  bad.add_term(0, 1, 1, Rational(1));  // [xi,u] = 2u now
  auto v = bad.validate_jacobi();
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].i == 0);
  CHECK(v[0].j == 1);
  CHECK(v[0].k == 2);
  CHECK_THROWS_AS(center(bad), JacobiError);
}

TEST_CASE("bracket and ad") {
  LieAlgebra h3a = heisenberg(1);  // [e1,e2] = e3
  CHECK(h3a.bracket(h3a.basis_vector(0), h3a.basis_vector(1)) == h3a.basis_vector(2));
  Vec x = h3a.basis_vector(0) + h3a.basis_vector(1);
  CHECK(is_zero_vec(h3a.bracket(x, x)));  // antisymmetry
  // Diatta-Foreman: [e1,e4] = e1
  auto df = catalog_find("diatta_foreman");
  REQUIRE(df.has_value());
  CHECK(df->algebra.bracket(df->algebra.basis_vector(0), df->algebra.basis_vector(3)) ==
        df->algebra.basis_vector(0));
  // ad columns are bracket(x, e_j)
  Matrix ad0 = df->algebra.ad_basis(0);
  for (int j = 0; j < 5; ++j)
    CHECK(ad0.column(j) == df->algebra.bracket(df->algebra.basis_vector(0), df->algebra.basis_vector(j)));
}

TEST_CASE("center") {
  CHECK(center(LieAlgebra::abelian(3)) == Subspace::full(3));
  LieAlgebra h3a = heisenberg(1);
  CHECK(center(h3a) == Subspace::span(3, {h3a.basis_vector(2)}));
  CHECK(center(dim5_normal_form(Dim5Label::G1Minus)).is_zero());
  CHECK(center(sl2()).is_zero());
}

TEST_CASE("derived and lower central series") {
  LieAlgebra h3a = heisenberg(1);
  CHECK(is_nilpotent(h3a));
  CHECK(is_solvable(h3a));
  CHECK(lower_central_series(h3a).size() == 3);  // g, [g,g], 0
  CHECK_FALSE(is_solvable(dim5_normal_form(Dim5Label::G0Plus)));
  CHECK_FALSE(is_solvable(dim5_normal_form(Dim5Label::G1Plus)));
  CHECK(is_solvable(dim5_normal_form(Dim5Label::G0Minus)));
  CHECK(is_solvable(dim5_normal_form(Dim5Label::G1Minus)));
  CHECK_FALSE(is_nilpotent(dim5_normal_form(Dim5Label::G0Minus)));
  CHECK_FALSE(is_solvable(sl2()));
  // derived series of a simple algebra is constant
  CHECK(derived_series(sl2()).back().dim() == 3);
}

TEST_CASE("unimodularity") {
  CHECK(is_unimodular(LieAlgebra::abelian(5)).unimodular);
  auto df = catalog_find("diatta_foreman");
  CHECK(is_unimodular(df->algebra).unimodular);
  // the 4-dim h of the first contactization example: tr(ad_{e4}) = 1
  LieAlgebra h(4, {"e1", "e2", "e3", "e4"});
  h.add_term(0, 3, 0, Rational(-1));
  h.add_term(2, 3, 1, Rational(-1));
  auto verdict = is_unimodular(h);
  CHECK_FALSE(verdict.unimodular);
  CHECK(*verdict.witness == 3);
  CHECK(verdict.witness_trace == Rational(1));
}

TEST_CASE("commutator subalgebra membership") {
  auto conv1 = catalog_find("converse_1");
  // xi = [e1,e2] - [xi,e1], quoted witness; and the rank test agrees.
  const LieAlgebra& g = conv1->algebra;
  Vec xi = g.basis_vector(0);
  Vec quoted = g.bracket(g.basis_vector(1), g.basis_vector(2)) - g.bracket(xi, g.basis_vector(1));
  CHECK(quoted == xi);
  CHECK(contains_in_commutator(g, xi));
  CHECK_FALSE(contains_in_commutator(LieAlgebra::abelian(3), LieAlgebra::abelian(3).basis_vector(0)));
  LieAlgebra h3a = heisenberg(1);
  CHECK(contains_in_commutator(h3a, h3a.basis_vector(2)));
}

TEST_CASE("ideals and ideal closure") {
  LieAlgebra h3a = heisenberg(1);
  Subspace closure = ideal_closure(h3a, h3a.basis_vector(2));
  CHECK(closure.dim() == 1);  // e3 is central
  CHECK(is_ideal(h3a, closure));
  // a random non-invariant line in sl(2,R) is not an ideal
  LieAlgebra s = sl2();
  CHECK_FALSE(is_ideal(s, Subspace::span(3, {s.basis_vector(1)})));
  CHECK(ideal_closure(s, s.basis_vector(1)).dim() == 3);  // simple
  // ideal_closure is always an ideal containing v
  FuzzRng rng(53);
  for (int t = 0; t < 20; ++t) {
    Vec v(5);
    for (auto& x : v) x = rng.small_rational();
    if (is_zero_vec(v)) continue;
    auto df = catalog_find("diatta_foreman");
    Subspace cl = ideal_closure(df->algebra, v);
    CHECK(cl.contains(v));
    CHECK(is_ideal(df->algebra, cl));
  }
}

TEST_CASE("minimal ideal dimension upper bound") {
  CHECK(minimal_ideal_dim_upper_bound(heisenberg(1)) == 1);
  CHECK(minimal_ideal_dim_upper_bound(sl2()) == 3);
  CHECK(minimal_ideal_dim_upper_bound(build_an(2).algebra()) == 2);  // V, dim n
}

TEST_CASE("killing form and signature") {
  CHECK(killing_signature(su2()) == Signature{0, 3, 0});
  CHECK(killing_signature(sl2()) == Signature{2, 1, 0});
  CHECK(killing_signature(LieAlgebra::abelian(4)) == Signature{0, 0, 4});
  // Killing form is symmetric and invariant: B([x,y],z) = B(x,[y,z])
  LieAlgebra s = sl2();
  Matrix b = killing_form(s);
  CHECK(b == b.transpose());
  FuzzRng rng(59);
  for (int t = 0; t < 20; ++t) {
    Vec x(3), y(3), z(3);
    for (auto* v : {&x, &y, &z})
      for (auto& c : *v) c = rng.small_rational();
    auto bform = [&](const Vec& a, const Vec& c) {
      Rational sum;
      Vec bc = b.apply(c);
      for (int i = 0; i < 3; ++i) sum += a[i] * bc[i];
      return sum;
    };
    CHECK(bform(s.bracket(x, y), z) == bform(x, s.bracket(y, z)));
  }
}

TEST_CASE("fingerprint distinguishes and is basis-invariant") {
  CHECK(fingerprint(sl2()) != fingerprint(su2()));
  CHECK(fingerprint(dim5_normal_form(Dim5Label::G0Minus)) != fingerprint(dim5_normal_form(Dim5Label::G1Minus)));
  FuzzRng rng(61);
  for (const char* name : {"diatta_foreman", "g1_minus", "su2"}) {
    auto entry = catalog_find(name);
    Fingerprint fp = fingerprint(entry->algebra);
    for (int t = 0; t < 3; ++t) {
      Matrix p = random_unimodular_matrix(rng, entry->algebra.dim());
      CHECK(fingerprint(basis_change(entry->algebra, p)) == fp);
    }
  }
}
