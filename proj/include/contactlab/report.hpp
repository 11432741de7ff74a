#ifndef CONTACTLAB_REPORT_HPP
#define CONTACTLAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "contactlab/analysis.hpp"
#include "contactlab/catalog.hpp"
#include "contactlab/io.hpp"

namespace contactlab {

struct AnalysisOutcome {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0 ok, 1 identity/jacobi failure, 3 no contact form
};

namespace report_detail {

inline nlohmann::ordered_json vec_json(const Vec& v) {
  auto a = nlohmann::ordered_json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

/// Heuristic search over dual-basis sums with coefficients in {-1, 0, 1}
/// (leading nonzero coefficient fixed to +1). Capped at dim 9: 3^n
/// candidates with a top-form evaluation each.
inline std::optional<KForm> contact_form_search(const LieAlgebra& L) {
  int n = L.dim();
  if (n % 2 == 0 || n > 9) return std::nullopt;
  std::vector<int> coeff(n, 0);
  long total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (long code = 1; code < total; ++code) {
    long c = code;
    bool leading_set = false, ok = true;
    for (int i = 0; i < n; ++i) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      coeff[i] = (digit == 2) ? -1 : digit;
      if (coeff[i] != 0 && !leading_set) {
        if (coeff[i] < 0) {
          ok = false;  // sign-flipped duplicate of an earlier candidate
          break;
        }
        leading_set = true;
      }
    }
    if (!ok) continue;
    KForm eta(n, 1);
    for (int i = 0; i < n; ++i)
      if (coeff[i] != 0) eta.add_term({i}, Rational(coeff[i]));
    if (is_contact(L, eta)) return eta;
  }
  return std::nullopt;
}

}  // namespace report_detail

/// Full machine-readable analysis of one algebra file: validation, contact
/// data, decomposition summary, identity checklist, witness section, Betti
/// numbers, eigenspace checks and the main-theorem audit. Deterministic
/// serialization (canonical rational strings, fixed key order).
inline AnalysisOutcome analyze(const AlgebraFile& file) {
  AnalysisOutcome out;
  nlohmann::ordered_json& rep = out.report;
  rep["input"] = {{"name", file.name}, {"dim", file.dim}, {"digest", digest(file)}};

  LieAlgebra L = to_lie_algebra(file);
  auto violations = L.validate_jacobi();
  rep["verdicts"]["jacobi"] = violations.empty() ? "valid" : "invalid";
  if (!violations.empty()) {
    auto ja = nlohmann::ordered_json::array();
    for (const auto& v : violations) {
      ja.push_back({{"triple", {v.i, v.j, v.k}}, {"residual", report_detail::vec_json(v.residual)}});
      if (ja.size() >= 10) break;
    }
    rep["verdicts"]["jacobi_violations"] = ja;
    out.exit_code = 1;
    return out;
  }

  bool odd_dim = (L.dim() % 2 == 1);
  std::optional<KForm> eta = contact_form_of(file);
  std::string form_source = "file";
  if (!eta && odd_dim) {
    eta = report_detail::contact_form_search(L);
    form_source = "heuristic search (dual-basis sums, +/-1 coefficients)";
  }
  if (!odd_dim || !eta || !is_contact(L, *eta)) {
    rep["verdicts"]["contact"] = false;
    if (eta) rep["verdicts"]["contact_form_source"] = form_source;
    auto uni = is_unimodular(L);
    rep["verdicts"]["unimodular"] = uni.unimodular;
    rep["cohomology"]["betti"] = betti_numbers(L);
    out.exit_code = 3;
    return out;
  }

  ContactStructure c = make_contact(L, *eta);
  rep["verdicts"]["contact"] = true;
  rep["verdicts"]["contact_form_source"] = form_source;
  rep["verdicts"]["reeb"] = report_detail::vec_json(c.reeb);

  auto uni = is_unimodular(L);
  rep["verdicts"]["unimodular"] = uni.unimodular;
  if (!uni.unimodular) rep["verdicts"]["unimodular_witness"] = L.labels()[*uni.witness];
  TransverseVerdict tv = is_transversely_unimodular(c);
  rep["verdicts"]["transversely_unimodular"] = tv.transversely_unimodular;
  DsVerdict ds = is_ds_contact(c);
  rep["verdicts"]["ds_contact"] = ds.ds;
  XiCommutatorEquivalences xc = xi_commutator_equivalences(c);
  rep["verdicts"]["xi_in_commutator"] = xc.in_commutator;
  rep["verdicts"]["xi_commutator_equivalences_agree"] = xc.agree();
  if (L.dim() == 5) rep["verdicts"]["classification"] = classify_dim5(c).label;

  ContactDecomposition d = decompose(c);
  BBomegaAnalysis bb = b_bomega_analysis(d);
  bool gamma_zero = true;
  for (int i = 0; i < d.dim_q(); ++i)
    for (int j = 0; j < d.dim_q(); ++j)
      if (!is_zero_vec(d.gamma[i][j])) gamma_zero = false;
  rep["decomposition"] = {{"dim_t", d.dim_t()},
                          {"dim_t0", d.dim_t0()},
                          {"dim_q", d.dim_q()},
                          {"A_char_poly", d.dim_q() > 0 ? char_poly(d.A).str() : "n/a"},
                          {"beta_rank", bb.b.dim()},
                          {"gamma_zero", gamma_zero}};
  if (d.pipeline_gate) rep["decomposition"]["pipeline_gate"] = *d.pipeline_gate;

  IdentityReport ir = check_identities(d);
  {
    auto list = nlohmann::ordered_json::array();
    for (const auto& v : ir.verdicts) {
      nlohmann::ordered_json e;
      e["id"] = v.id;
      e["verdict"] = v.kind == IdentityVerdict::Kind::Pass   ? "pass"
                     : v.kind == IdentityVerdict::Kind::Fail ? "fail"
                                                             : "skip";
      if (!v.detail.empty()) e[v.kind == IdentityVerdict::Kind::Fail ? "witness" : "reason"] = v.detail;
      list.push_back(std::move(e));
    }
    rep["identities"] = {{"passed", ir.passed}, {"failed", ir.failed}, {"skipped", ir.skipped},
                         {"checklist", std::move(list)}};
  }

  WitnessResult w = witness_e(d);
  if (w.gate) {
    rep["witness"] = {{"gate", *w.gate}};
  } else {
    rep["witness"] = {{"e", report_detail::vec_json(w.e)},
                      {"tr_t", w.tr_t.str()},
                      {"tr_q", w.tr_q.str()},
                      {"tr_total", w.tr_total.str()},
                      {"checks_ok", w.all_checks()}};
  }

  rep["cohomology"]["betti"] = betti_numbers(L);
  rep["cohomology"]["basic_betti"] = basic_betti(c);

  EigenPairingReport ep = eigen_pairing_checks(d);
  if (ep.skipped) {
    rep["eigen_pairing"] = {{"skipped", true}, {"reason", ep.skip_reason}};
  } else {
    auto pairs = nlohmann::ordered_json::array();
    for (const auto& p : ep.pairs)
      pairs.push_back({{"lambda", p.lambda.str()},
                       {"dim", p.dim},
                       {"master_equation", p.master_equation_ok},
                       {"T_eq_P_plus_Qdag", p.t_formula_i_ok},
                       {"T_eq_TP_plus_QdagT", p.t_formula_ii_ok},
                       {"char_poly", p.charpoly},
                       {"char_poly_x_a_xm1_b", p.charpoly_ok}});
    rep["eigen_pairing"] = {{"skipped", false},
                            {"orthogonality", ep.orthogonality_ok},
                            {"omega_pairing", ep.omega_pairing_ok},
                            {"pairs", std::move(pairs)}};
  }

  MainTheoremAudit audit = main_theorem_audit(c);
  rep["main_theorem"] = {{"transversely_unimodular", audit.transversely_unimodular},
                         {"ad_xi_nilpotent", audit.ks_zero},
                         {"fingerprint_sl2_su2", audit.fingerprint_sl2_su2},
                         {"implication_holds", audit.implication_holds},
                         {"witness_ok", audit.witness_ok},
                         {"pass", audit.pass}};

  bool eigen_ok = ep.skipped || ep.all_pass();
  if (!ir.all_pass() || !audit.pass || !xc.agree() || !eigen_ok) out.exit_code = 1;
  return out;
}

}  // namespace contactlab

#endif
