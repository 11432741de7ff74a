#include <doctest.h>

#include "contactlab/analysis.hpp"
#include "contactlab/catalog.hpp"
#include "contactlab/fingerprint.hpp"

using namespace contactlab;

namespace {

/// Re-derives one expected verdict; the catalog never trusts its own data.
void check_expected(const CatalogEntry& e, const std::string& key, const std::string& want) {
  CAPTURE(e.name);
  CAPTURE(key);
  const LieAlgebra& L = e.algebra;
  bool valid = L.jacobi_valid();

  if (key == "jacobi") {
    CHECK((want == "valid") == valid);
    return;
  }
  if (key.rfind("trace_ad_", 0) == 0) {
    int idx = std::stoi(key.substr(9));
    CHECK(L.ad_basis(idx).trace() == Rational::parse(want));  // no Jacobi needed
    return;
  }
  if (key == "iso") {
    REQUIRE(valid);
    LieAlgebra model = (want == "aff(R) + su(2)") ? direct_sum(aff_r(), su2()) : direct_sum(aff_r(), sl2());
    CHECK(fingerprint(L) == fingerprint(model));
    return;
  }
  REQUIRE(valid);  // everything below runs analyses
  if (key == "unimodular") {
    CHECK(is_unimodular(L).unimodular == (want == "true"));
    return;
  }
  if (key == "solvable") {
    CHECK(is_solvable(L) == (want == "true"));
    return;
  }
  if (key == "nilpotent") {
    CHECK(is_nilpotent(L) == (want == "true"));
    return;
  }
  if (key == "center_dim") {
    CHECK(center(L).dim() == std::stoi(want));
    return;
  }
  if (key == "killing_signature") {
    Signature s = killing_signature(L);
    std::string got = "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + "," +
                      std::to_string(s.zero) + ")";
    CHECK(got == want);
    return;
  }
  REQUIRE(e.contact_form.has_value());
  ContactStructure c = make_contact(L, *e.contact_form);
  if (key == "contact") {
    CHECK(is_contact(L, *e.contact_form) == (want == "true"));
    return;
  }
  if (key == "reeb") {
    CHECK(vec_str(c.reeb) == want);
    return;
  }
  if (key == "ds") {
    CHECK(is_ds_contact(c).ds == (want == "true"));
    return;
  }
  if (key == "transversely_unimodular") {
    CHECK(is_transversely_unimodular(c).transversely_unimodular == (want == "true"));
    return;
  }
  if (key == "xi_in_commutator") {
    CHECK(contains_in_commutator(L, c.reeb) == (want == "true"));
    return;
  }
  if (key == "classification") {
    CHECK(classify_dim5(c).label == want);
    return;
  }
  if (key == "ad_xi_nilpotent") {
    CHECK(decompose(c).K_s.is_zero() == (want == "true"));
    return;
  }
  if (key == "ad_xi_squared_zero") {
    Matrix k = L.ad(c.reeb);
    CHECK((k * k).is_zero() == (want == "true"));
    return;
  }
  if (key == "witness_traces") {
    WitnessResult w = witness_e(decompose(c));
    REQUIRE_FALSE(w.gate.has_value());
    std::string got = "(" + w.tr_t.str() + "," + w.tr_q.str() + "," + w.tr_total.str() + ")";
    CHECK(got == want);
    return;
  }
  if (key == "gamma_e3_e2") {
    ContactDecomposition d = decompose(c);
    REQUIRE(d.dim_q() == 4);
    Vec e1_in_q(4);
    e1_in_q[0] = Rational(1);
    CHECK(d.gamma[2][1] == e1_in_q);
    return;
  }
  FAIL("unknown expected key: ", key);
}

}  // namespace

TEST_CASE("catalog self-test: every expected verdict is re-derived") {
  auto entries = catalog();
  CHECK(entries.size() == 18);
  for (const auto& e : entries) {
    CHECK_FALSE(e.provenance.empty());
    REQUIRE(e.expected.count("jacobi") == 1);
    for (const auto& [key, want] : e.expected) check_expected(e, key, want);
  }
}

TEST_CASE("the catalog keeps at least 14 Jacobi-valid contact entries") {
  int n = 0;
  for (const auto& e : catalog())
    if (e.contact_form && e.algebra.jacobi_valid()) ++n;
  CHECK(n >= 14);
}

TEST_CASE("unimodular entries have the Reeb vector in the commutator") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    if (!is_unimodular(e.algebra).unimodular) continue;
    CAPTURE(e.name);
    Vec reeb = reeb_vector(e.algebra, *e.contact_form);
    CHECK(contains_in_commutator(e.algebra, reeb));
  }
}

TEST_CASE("center of every contact entry is zero or the Reeb line") {
  for (const auto& e : catalog()) {
    if (!e.contact_form || !e.algebra.jacobi_valid()) continue;
    CAPTURE(e.name);
    Subspace z = center(e.algebra);
    CHECK(is_ideal(e.algebra, z));
    if (!z.is_zero()) {
      CHECK(z.dim() == 1);
      CHECK(z.contains(reeb_vector(e.algebra, *e.contact_form)));
    }
  }
}

TEST_CASE("catalog names used by the CLI exist") {
  for (const char* name : {"diatta_foreman", "g0_plus", "g1_minus", "sl2", "su2", "h3"})
    CHECK(catalog_find(name).has_value());
  CHECK_FALSE(catalog_find("nonexistent").has_value());
}
