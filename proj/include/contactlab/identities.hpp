#ifndef CONTACTLAB_IDENTITIES_HPP
#define CONTACTLAB_IDENTITIES_HPP

#include <string>
#include <utility>
#include <vector>

#include "contactlab/decomposition.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

struct IdentityVerdict {
  enum class Kind { Pass, Fail, Skipped } kind = Kind::Pass;
  std::string id;
  std::string detail;  // witness tuple on fail, reason on skip

  static IdentityVerdict pass(std::string id) { return {Kind::Pass, std::move(id), ""}; }
  static IdentityVerdict fail(std::string id, std::string witness) {
    return {Kind::Fail, std::move(id), std::move(witness)};
  }
  static IdentityVerdict skipped(std::string id, std::string reason) {
    return {Kind::Skipped, std::move(id), std::move(reason)};
  }
};

struct IdentityReport {
  std::vector<IdentityVerdict> verdicts;  // every identity id exactly once
  int passed = 0, failed = 0, skipped = 0;

  void add(IdentityVerdict v) {
    switch (v.kind) {
      case IdentityVerdict::Kind::Pass: ++passed; break;
      case IdentityVerdict::Kind::Fail: ++failed; break;
      case IdentityVerdict::Kind::Skipped: ++skipped; break;
    }
    verdicts.push_back(std::move(v));
  }
  bool all_pass() const { return failed == 0; }
};

/// b = im beta and its omega_t-orthogonal complement inside t0, with the
/// verdicts the corollaries attach to them. Subspaces live in
/// t0-coordinates.
struct BBomegaAnalysis {
  Subspace b;        // span of beta values
  Subspace b_omega;  // omega_t-orthogonal complement of b in t0
  Subspace k;        // b ∩ b_omega
  // General (any contact algebra):
  bool b_c_stable = false;
  bool b_omega_c_stable = false;
  bool bracket_a_rho_bomega_inside = false;       // [A, rho(b_omega)] ⊆ rho(b_omega)
  bool rho_symplectic_iff_in_bomega = false;      // {x : rho(x) ∈ sp(q)} = b_omega
  bool trace_rho_zero_on_bomega = false;
  // DS-only obstructions:
  bool b_is_ideal = false;
  bool b_dim_bound = false;            // dim b <= (dim q / 2)^2
  bool b_omega_is_subalgebra = false;
  bool b_omega_codim_bound = false;
  bool rho_bomega_centralizes_a = false;
  bool k_is_ideal_of_bomega = false;
  bool omega_t_descends_nondegenerate = false;
  bool mu_closed = false;              // mu = tr o rho closed on (t0, alpha)
  bool bomega_in_ker_mu = false;
};

namespace detail {

/// alpha restricted to t0, bilinear: x is a t0-basis index, w t0-coordinates.
inline Vec alpha_t0(const ContactDecomposition& d, int x, const Vec& w) {
  Vec out(d.dim_t0());
  for (int j = 0; j < d.dim_t0(); ++j)
    if (!w[j].is_zero()) out = out + w[j] * d.alpha[1 + x][1 + j];
  return out;
}

/// alpha on t0-coordinate vectors.
inline Vec alpha_t0_vec(const ContactDecomposition& d, const Vec& a, const Vec& b) {
  Vec out(d.dim_t0());
  for (int i = 0; i < d.dim_t0(); ++i)
    if (!a[i].is_zero()) out = out + a[i] * alpha_t0(d, i, b);
  return out;
}

inline Matrix t0_gram(const ContactDecomposition& d) {
  int n = d.dim_t0();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w(i, j) = d.omega_t(1 + i, 1 + j);
  return w;
}

inline Matrix rho_of(const ContactDecomposition& d, const Vec& t0_coords) {
  Matrix m(d.dim_q(), d.dim_q());
  for (int i = 0; i < d.dim_t0(); ++i)
    if (!t0_coords[i].is_zero()) m = m + t0_coords[i] * d.rho[i];
  return m;
}

inline bool in_sp_q(const ContactDecomposition& d, const Matrix& m) {
  return (m.transpose() * d.omega_q + d.omega_q * m).is_zero();
}

inline Matrix c_on_t0(const ContactDecomposition& d) {
  int n = d.dim_t0();
  Matrix c(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c(i, j) = d.C(1 + i, 1 + j);
  return c;
}

}  // namespace detail

inline BBomegaAnalysis b_bomega_analysis(const ContactDecomposition& d) {
  BBomegaAnalysis out;
  int dt0 = d.dim_t0(), dq = d.dim_q();
  Matrix w = detail::t0_gram(d);
  Matrix c0 = detail::c_on_t0(d);

  std::vector<Vec> beta_values;
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j < dq; ++j)
      if (!is_zero_vec(d.beta[i][j])) beta_values.push_back(d.beta[i][j]);
  out.b = Subspace::span(dt0, beta_values);

  // b_omega = kernel of z -> omega_t(., z) over the b basis.
  std::vector<Vec> rows;
  for (const auto& z : out.b.basis_vectors()) rows.push_back(w.apply(z));
  out.b_omega = rows.empty() ? Subspace::full(dt0) : Subspace::span(dt0, Matrix::from_rows(rows).kernel_basis());
  out.k = out.b.intersect(out.b_omega);

  auto c_stable = [&](const Subspace& s) {
    for (const auto& v : s.basis_vectors())
      if (!s.contains(c0.apply(v))) return false;
    return true;
  };
  out.b_c_stable = c_stable(out.b);
  out.b_omega_c_stable = c_stable(out.b_omega);

  // rho(b_omega) as a subspace of End(q), flattened.
  std::vector<Vec> rho_bw;
  for (const auto& x : out.b_omega.basis_vectors()) rho_bw.push_back(flatten(detail::rho_of(d, x)));
  Subspace rho_bw_span = Subspace::span(dq * dq, rho_bw);
  out.bracket_a_rho_bomega_inside = true;
  for (const auto& x : out.b_omega.basis_vectors()) {
    Matrix comm = commutator(d.A, detail::rho_of(d, x));
    if (!rho_bw_span.contains(flatten(comm))) out.bracket_a_rho_bomega_inside = false;
  }

  // {x in t0 : rho(x) in sp(q, omega_q)} as a kernel, compared to b_omega.
  {
    std::vector<Vec> cols;
    for (int i = 0; i < dt0; ++i)
      cols.push_back(flatten(d.rho[i].transpose() * d.omega_q + d.omega_q * d.rho[i]));
    Subspace sp_locus = cols.empty()
                            ? Subspace::full(dt0)
                            : Subspace::span(dt0, Matrix::from_columns(cols).kernel_basis());
    out.rho_symplectic_iff_in_bomega = (sp_locus == out.b_omega);
  }

  out.trace_rho_zero_on_bomega = true;
  for (const auto& x : out.b_omega.basis_vectors())
    if (!detail::rho_of(d, x).trace().is_zero()) out.trace_rho_zero_on_bomega = false;

  if (!d.ds) return out;  // the obstruction corollaries assume DS

  int bound = (dq / 2) * (dq / 2);
  out.b_dim_bound = out.b.dim() <= bound;
  out.b_omega_codim_bound = (dt0 - out.b_omega.dim()) <= bound;

  out.b_is_ideal = true;
  for (int i = 0; i < dt0; ++i)
    for (const auto& z : out.b.basis_vectors())
      if (!out.b.contains(detail::alpha_t0(d, i, z))) out.b_is_ideal = false;

  out.b_omega_is_subalgebra = true;
  for (const auto& x : out.b_omega.basis_vectors())
    for (const auto& y : out.b_omega.basis_vectors())
      if (!out.b_omega.contains(detail::alpha_t0_vec(d, x, y))) out.b_omega_is_subalgebra = false;

  out.rho_bomega_centralizes_a = true;
  for (const auto& x : out.b_omega.basis_vectors()) {
    Matrix r = detail::rho_of(d, x);
    if (!commutator(d.A, r).is_zero() || !detail::in_sp_q(d, r)) out.rho_bomega_centralizes_a = false;
  }

  out.k_is_ideal_of_bomega = true;
  for (const auto& x : out.b_omega.basis_vectors())
    for (const auto& z : out.k.basis_vectors())
      if (!out.k.contains(detail::alpha_t0_vec(d, x, z))) out.k_is_ideal_of_bomega = false;

  // Radical of omega_t restricted to b_omega must be exactly k.
  {
    auto bw = out.b_omega.basis_vectors();
    int m = static_cast<int>(bw.size());
    Matrix gram(m, m);
    for (int i = 0; i < m; ++i) {
      Vec wz = w.apply(bw[i]);
      for (int j = 0; j < m; ++j) {
        Rational s;
        for (int t = 0; t < dt0; ++t) s += bw[j][t] * wz[t];
        gram(j, i) = s;  // omega_t(bw_j, bw_i)
      }
    }
    std::vector<Vec> rad;
    for (const auto& kv : gram.kernel_basis()) {
      Vec v(dt0);
      for (int i = 0; i < m; ++i)
        if (!kv[i].is_zero()) v = v + kv[i] * bw[i];
      rad.push_back(std::move(v));
    }
    out.omega_t_descends_nondegenerate = (Subspace::span(dt0, rad) == out.k);
  }

  out.mu_closed = true;
  Vec mu(dt0);
  for (int i = 0; i < dt0; ++i) mu[i] = d.rho[i].trace();
  auto mu_of = [&](const Vec& v) {
    Rational s;
    for (int i = 0; i < dt0; ++i) s += mu[i] * v[i];
    return s;
  };
  for (int x = 0; x < dt0; ++x)
    for (int y = 0; y < dt0; ++y)
      if (!mu_of(d.alpha[1 + x][1 + y]).is_zero()) out.mu_closed = false;
  out.bomega_in_ker_mu = true;
  for (const auto& x : out.b_omega.basis_vectors())
    if (!mu_of(x).is_zero()) out.bomega_in_ker_mu = false;

  return out;
}

/// Machine verification of every identity of the decomposition lemmas:
/// simplecticity (i)-(vi), the t-module lemma, the fifteen Jacobi-derived
/// identities, the b/b-omega corollary (i)-(iv), the DS obstruction
/// corollary (i)-(v), and the DS-specialized identities (i)-(iv).
/// Everything is evaluated exactly on full bases; fails carry the witness
/// tuple, DS-only identities are skipped on non-DS input.
inline IdentityReport check_identities(const ContactDecomposition& d) {
  IdentityReport rep;
  const LieAlgebra& L = d.contact.algebra;
  int dt = d.dim_t(), dt0 = d.dim_t0(), dq = d.dim_q();

  // h-basis in adapted order (t0 then q) with the omega gram on it.
  std::vector<Vec> h;
  for (const auto& v : d.t0_basis) h.push_back(v);
  for (const auto& v : d.q_basis) h.push_back(v);
  int dh = static_cast<int>(h.size());
  Matrix gram_h(dh, dh);
  for (int i = 0; i < dh; ++i)
    for (int j = 0; j < dh; ++j) gram_h(i, j) = d.contact.omega.eval({h[i], h[j]});

  auto op_on_h = [&](const Matrix& ambient_op) {
    // Restriction of an h-invariant ambient operator to the h-basis.
    std::vector<Vec> cols_h{d.contact.reeb};
    for (const auto& v : h) cols_h.push_back(v);
    Matrix to_h = Matrix::from_columns(cols_h).inverse();
    Matrix m(dh, dh);
    for (int j = 0; j < dh; ++j) {
      Vec w = to_h.apply(ambient_op.apply(h[j]));
      for (int i = 0; i < dh; ++i) m(i, j) = w[1 + i];
    }
    return m;
  };

  // --- simplecticity -------------------------------------------------------
  {
    Matrix kh = op_on_h(d.K), ksh = op_on_h(d.K_s);
    bool ok = (kh.transpose() * gram_h + gram_h * kh).is_zero() &&
              (ksh.transpose() * gram_h + gram_h * ksh).is_zero();
    rep.add(ok ? IdentityVerdict::pass("simplecticity.i")
               : IdentityVerdict::fail("simplecticity.i", "K|h or K_s|h not in sp(h, omega)"));

    Matrix ksh_mat = ksh;
    Subspace ker_h = Subspace::span(dh, ksh_mat.kernel_basis());
    Subspace im_h = Subspace::span(dh, ksh_mat.image_basis());
    std::vector<Vec> rows;
    for (const auto& z : im_h.basis_vectors()) {
      Vec r(dh);
      for (int i = 0; i < dh; ++i) {
        Rational s;
        for (int j = 0; j < dh; ++j) s += gram_h(i, j) * z[j];
        r[i] = s;
      }
      rows.push_back(std::move(r));
    }
    Subspace orth = rows.empty() ? Subspace::full(dh) : Subspace::span(dh, Matrix::from_rows(rows).kernel_basis());
    rep.add(ker_h == orth ? IdentityVerdict::pass("simplecticity.ii")
                          : IdentityVerdict::fail("simplecticity.ii", "ker K_s|h != (im K_s|h)^perp"));

    bool ortho = true;
    std::string wit;
    for (int i = 0; i < dt0 && ortho; ++i)
      for (int j = 0; j < dq && ortho; ++j)
        if (!d.contact.omega.eval({d.t0_basis[i], d.q_basis[j]}).is_zero()) {
          ortho = false;
          wit = "(t0[" + std::to_string(i) + "], q[" + std::to_string(j) + "])";
        }
    rep.add(ortho ? IdentityVerdict::pass("simplecticity.iii") : IdentityVerdict::fail("simplecticity.iii", wit));

    // omega = omega_t + omega_q: the gram on h is block diagonal and the
    // blocks are exactly the stored restrictions.
    bool split_ok = ortho;
    for (int i = 0; i < dt0 && split_ok; ++i)
      for (int j = 0; j < dt0; ++j)
        if (gram_h(i, j) != d.omega_t(1 + i, 1 + j)) {
          split_ok = false;
          break;
        }
    for (int i = 0; i < dq && split_ok; ++i)
      for (int j = 0; j < dq; ++j)
        if (gram_h(dt0 + i, dt0 + j) != d.omega_q(i, j)) {
          split_ok = false;
          break;
        }
    rep.add(split_ok ? IdentityVerdict::pass("simplecticity.iv")
                     : IdentityVerdict::fail("simplecticity.iv", "omega does not split as omega_t + omega_q"));

    rep.add(detail::t0_gram(d).rank() == dt0
                ? IdentityVerdict::pass("simplecticity.v")
                : IdentityVerdict::fail("simplecticity.v", "omega_t degenerate on t0"));
    rep.add(d.omega_q.rank() == dq ? IdentityVerdict::pass("simplecticity.vi")
                                   : IdentityVerdict::fail("simplecticity.vi", "omega_q degenerate on q"));
  }

  // --- t-module lemma ------------------------------------------------------
  {
    bool tt = true, tq = true;
    std::string wit_tt, wit_tq;
    for (int i = 0; i < dt && tt; ++i)
      for (int j = 0; j < dt && tt; ++j)
        if (!d.t.contains(L.bracket(d.t_basis[i], d.t_basis[j]))) {
          tt = false;
          wit_tt = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    for (int i = 0; i < dt && tq; ++i)
      for (int j = 0; j < dq && tq; ++j)
        if (!d.q.contains(L.bracket(d.t_basis[i], d.q_basis[j]))) {
          tq = false;
          wit_tq = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
    rep.add(tt ? IdentityVerdict::pass("t_module.i") : IdentityVerdict::fail("t_module.i", wit_tt));
    rep.add(tq ? IdentityVerdict::pass("t_module.ii") : IdentityVerdict::fail("t_module.ii", wit_tq));
  }

  // --- the fifteen Jacobi identities --------------------------------------
  Matrix w0 = detail::t0_gram(d);
  Matrix c0 = detail::c_on_t0(d);
  auto wt = [&](int x, int y) { return w0(x, y); };                       // t0 indices
  auto wq = [&](const Vec& u, const Vec& v) {                             // q-coordinates
    Rational s;
    Vec gv = d.omega_q.apply(v);
    for (int i = 0; i < dq; ++i) s += u[i] * gv[i];
    return s;
  };
  auto beta_vec = [&](const Vec& u, const Vec& v) {  // bilinear on q-coordinates
    Vec out(dt0);
    for (int i = 0; i < dq; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dq; ++j)
        if (!v[j].is_zero()) out = out + (u[i] * v[j]) * d.beta[i][j];
    }
    return out;
  };
  auto gamma_vec = [&](const Vec& u, const Vec& v) {
    Vec out(dq);
    for (int i = 0; i < dq; ++i) {
      if (u[i].is_zero()) continue;
      for (int j = 0; j < dq; ++j)
        if (!v[j].is_zero()) out = out + (u[i] * v[j]) * d.gamma[i][j];
    }
    return out;
  };
  auto qe = [&](int i) {
    Vec v(dq);
    v[i] = Rational(1);
    return v;
  };
  auto t0e = [&](int i) {
    Vec v(dt0);
    v[i] = Rational(1);
    return v;
  };

  auto check = [&](const char* id, bool ok, const std::string& wit) {
    rep.add(ok ? IdentityVerdict::pass(id) : IdentityVerdict::fail(id, wit));
  };

  {  // (i) C* omega_t = 0 on t0
    bool ok = (c0.transpose() * w0 + w0 * c0).is_zero();
    check("jacobi.i", ok, "C not in sp(t0, omega_t)");
  }
  {  // (ii) A* omega_q = 0
    bool ok = (d.A.transpose() * d.omega_q + d.omega_q * d.A).is_zero();
    check("jacobi.ii", ok, "A not in sp(q, omega_q)");
  }
  {  // (iii) alpha(Cx, y) + alpha(x, Cy) = C(alpha(x,y)) on t0
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int y = 0; y < dt0 && ok; ++y) {
        Vec lhs = detail::alpha_t0_vec(d, c0.column(x), t0e(y)) + detail::alpha_t0_vec(d, t0e(x), c0.column(y));
        Vec rhs = c0.apply(d.alpha[1 + x][1 + y]);
        if (lhs != rhs) {
          ok = false;
          wit = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
      }
    check("jacobi.iii", ok, wit);
  }
  {  // (iv) beta(Au, v) + beta(u, Av) = C(beta(u,v))
    bool ok = true;
    std::string wit;
    for (int u = 0; u < dq && ok; ++u)
      for (int v = 0; v < dq && ok; ++v) {
        Vec lhs = beta_vec(d.A.column(u), qe(v)) + beta_vec(qe(u), d.A.column(v));
        Vec rhs = c0.apply(d.beta[u][v]);
        if (lhs != rhs) {
          ok = false;
          wit = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
      }
    check("jacobi.iv", ok, wit);
  }
  {  // (v) gamma(Au, v) + gamma(u, Av) = A(gamma(u,v))
    bool ok = true;
    std::string wit;
    for (int u = 0; u < dq && ok; ++u)
      for (int v = 0; v < dq && ok; ++v) {
        Vec lhs = gamma_vec(d.A.column(u), qe(v)) + gamma_vec(qe(u), d.A.column(v));
        Vec rhs = d.A.apply(d.gamma[u][v]);
        if (lhs != rhs) {
          ok = false;
          wit = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        }
      }
    check("jacobi.v", ok, wit);
  }
  {  // (vi) [A, rho(x)] = rho(Cx)
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      if (commutator(d.A, d.rho[x]) != detail::rho_of(d, c0.column(x))) {
        ok = false;
        wit = "(x=" + std::to_string(x) + ")";
      }
    check("jacobi.vi", ok, wit);
  }
  {  // (vii) [rho(x), rho(y)] = rho(alpha(x,y)) + omega_t(x,y) A
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int y = 0; y < dt0 && ok; ++y) {
        Matrix rhs = detail::rho_of(d, d.alpha[1 + x][1 + y]) + wt(x, y) * d.A;
        if (commutator(d.rho[x], d.rho[y]) != rhs) {
          ok = false;
          wit = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
        }
      }
    check("jacobi.vii", ok, wit);
  }
  {  // (viii) omega_q(rho(x)u, v) + omega_q(u, rho(x)v) = omega_t(x, beta(u,v))
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int u = 0; u < dq && ok; ++u)
        for (int v = 0; v < dq && ok; ++v) {
          Rational lhs = wq(d.rho[x].column(u), qe(v)) + wq(qe(u), d.rho[x].column(v));
          Rational rhs;
          for (int k = 0; k < dt0; ++k) rhs += wt(x, k) * d.beta[u][v][k];
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(x) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
          }
        }
    check("jacobi.viii", ok, wit);
  }
  {  // (ix) beta(rho(x)u, v) + beta(u, rho(x)v) = alpha(x, beta(u,v)) - omega_q(u,v) Cx
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int u = 0; u < dq && ok; ++u)
        for (int v = 0; v < dq && ok; ++v) {
          Vec lhs = beta_vec(d.rho[x].column(u), qe(v)) + beta_vec(qe(u), d.rho[x].column(v));
          Vec rhs = detail::alpha_t0(d, x, d.beta[u][v]) - d.omega_q(u, v) * c0.column(x);
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(x) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
          }
        }
    check("jacobi.ix", ok, wit);
  }
  {  // (x) gamma(rho(x)u, v) + gamma(u, rho(x)v) = rho(x)(gamma(u,v))
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int u = 0; u < dq && ok; ++u)
        for (int v = 0; v < dq && ok; ++v) {
          Vec lhs = gamma_vec(d.rho[x].column(u), qe(v)) + gamma_vec(qe(u), d.rho[x].column(v));
          Vec rhs = d.rho[x].apply(d.gamma[u][v]);
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(x) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
          }
        }
    check("jacobi.x", ok, wit);
  }
  auto cyc = [&](auto&& f, int a, int b, int c) { return f(a, b, c) + f(b, c, a) + f(c, a, b); };
  {  // (xi) cyclic omega_t(alpha(x,y), z) = 0
    bool ok = true;
    std::string wit;
    auto term = [&](int x, int y, int z) {
      Rational s;
      for (int k = 0; k < dt0; ++k) s += d.alpha[1 + x][1 + y][k] * wt(k, z);
      return s;
    };
    for (int x = 0; x < dt0 && ok; ++x)
      for (int y = 0; y < dt0 && ok; ++y)
        for (int z = 0; z < dt0 && ok; ++z)
          if (!cyc(term, x, y, z).is_zero()) {
            ok = false;
            wit = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
          }
    check("jacobi.xi", ok, wit);
  }
  {  // (xii) cyclic omega_q(gamma(u,v), w) = 0
    bool ok = true;
    std::string wit;
    auto term = [&](int u, int v, int w) { return wq(d.gamma[u][v], qe(w)); };
    for (int u = 0; u < dq && ok; ++u)
      for (int v = 0; v < dq && ok; ++v)
        for (int w = 0; w < dq && ok; ++w)
          if (!cyc(term, u, v, w).is_zero()) {
            ok = false;
            wit = "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
          }
    check("jacobi.xii", ok, wit);
  }
  {  // (xiii) cyclic beta(gamma(u,v), w) = 0
    bool ok = true;
    std::string wit;
    for (int u = 0; u < dq && ok; ++u)
      for (int v = 0; v < dq && ok; ++v)
        for (int w = 0; w < dq && ok; ++w) {
          Vec s = beta_vec(d.gamma[u][v], qe(w)) + beta_vec(d.gamma[v][w], qe(u)) + beta_vec(d.gamma[w][u], qe(v));
          if (!is_zero_vec(s)) {
            ok = false;
            wit = "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
          }
        }
    check("jacobi.xiii", ok, wit);
  }
  {  // (xiv) cyclic alpha(x, alpha(y,z)) = cyclic omega_t(x,y) Cz
     // (the Jacobi-derived association; both sides vanish when C = 0)
    bool ok = true;
    std::string wit;
    for (int x = 0; x < dt0 && ok; ++x)
      for (int y = 0; y < dt0 && ok; ++y)
        for (int z = 0; z < dt0 && ok; ++z) {
          Vec lhs = detail::alpha_t0(d, x, d.alpha[1 + y][1 + z]) +
                    detail::alpha_t0(d, y, d.alpha[1 + z][1 + x]) +
                    detail::alpha_t0(d, z, d.alpha[1 + x][1 + y]);
          Vec rhs = wt(x, y) * c0.column(z) + wt(y, z) * c0.column(x) + wt(z, x) * c0.column(y);
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
          }
        }
    check("jacobi.xiv", ok, wit);
  }
  {  // (xv) cyclic gamma(u, gamma(v,w)) = cyclic (omega_q(u,v) Aw + rho(beta(u,v)) w)
     // (Jacobi-derived association, as in (xiv))
    bool ok = true;
    std::string wit;
    auto tterm = [&](int u, int v, int w) {
      return d.omega_q(u, v) * d.A.column(w) + detail::rho_of(d, d.beta[u][v]).column(w);
    };
    for (int u = 0; u < dq && ok; ++u)
      for (int v = 0; v < dq && ok; ++v)
        for (int w = 0; w < dq && ok; ++w) {
          Vec lhs = gamma_vec(qe(u), d.gamma[v][w]) + gamma_vec(qe(v), d.gamma[w][u]) + gamma_vec(qe(w), d.gamma[u][v]);
          Vec rhs = tterm(u, v, w) + tterm(v, w, u) + tterm(w, u, v);
          if (lhs != rhs) {
            ok = false;
            wit = "(" + std::to_string(u) + "," + std::to_string(v) + "," + std::to_string(w) + ")";
          }
        }
    check("jacobi.xv", ok, wit);
  }

  // --- b / b-omega corollaries --------------------------------------------
  BBomegaAnalysis bb = b_bomega_analysis(d);
  check("b_bomega.i", bb.b_c_stable && bb.b_omega_c_stable, "b or b_omega not C-stable");
  check("b_bomega.ii", bb.bracket_a_rho_bomega_inside, "[A, rho(b_omega)] escapes rho(b_omega)");
  check("b_bomega.iii", bb.rho_symplectic_iff_in_bomega, "{x : rho(x) in sp} != b_omega");
  check("b_bomega.iv", bb.trace_rho_zero_on_bomega, "tr(rho(x)) != 0 on b_omega");

  auto ds_check = [&](const char* id, bool ok, const std::string& wit) {
    if (!d.ds)
      rep.add(IdentityVerdict::skipped(id, "not DS-contact"));
    else
      rep.add(ok ? IdentityVerdict::pass(id) : IdentityVerdict::fail(id, wit));
  };
  ds_check("obstructions.i", bb.b_is_ideal && bb.b_dim_bound, "b not an ideal or dim bound violated");
  ds_check("obstructions.ii", bb.b_omega_is_subalgebra && bb.b_omega_codim_bound,
           "b_omega not a subalgebra or codim bound violated");
  ds_check("obstructions.iii", bb.rho_bomega_centralizes_a, "rho(b_omega) not in centralizer of A in sp(q)");
  ds_check("obstructions.iv", bb.k_is_ideal_of_bomega && bb.omega_t_descends_nondegenerate,
           "k not an ideal or omega_t does not descend nondegenerately");
  ds_check("obstructions.v", bb.mu_closed && bb.bomega_in_ker_mu, "mu not closed or b_omega not in ker mu");

  // --- DS-specialized identities ------------------------------------------
  {
    bool i_ok = true, ii_ok = true, iii_ok = true, iv_ok = true;
    std::string wi, wii, wiii, wiv;
    if (d.ds) {
      for (int u = 0; u < dq && i_ok; ++u)
        for (int v = 0; v < dq && i_ok; ++v) {
          Vec lhs = beta_vec(d.A.column(u), qe(v)) + beta_vec(qe(u), d.A.column(v));
          if (!is_zero_vec(lhs)) {
            i_ok = false;
            wi = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
          }
        }
      for (int x = 0; x < dt0 && ii_ok; ++x)
        if (!commutator(d.A, d.rho[x]).is_zero()) {
          ii_ok = false;
          wii = "(x=" + std::to_string(x) + ")";
        }
      for (int x = 0; x < dt0 && iii_ok; ++x)
        for (int u = 0; u < dq && iii_ok; ++u)
          for (int v = 0; v < dq && iii_ok; ++v) {
            Vec lhs = beta_vec(d.rho[x].column(u), qe(v)) + beta_vec(qe(u), d.rho[x].column(v));
            if (lhs != detail::alpha_t0(d, x, d.beta[u][v])) {
              iii_ok = false;
              wiii = "(" + std::to_string(x) + "," + std::to_string(u) + "," + std::to_string(v) + ")";
            }
          }
      for (int x = 0; x < dt0 && iv_ok; ++x)
        for (int y = 0; y < dt0 && iv_ok; ++y)
          for (int z = 0; z < dt0 && iv_ok; ++z) {
            Vec s = detail::alpha_t0_vec(d, d.alpha[1 + x][1 + y], t0e(z)) +
                    detail::alpha_t0_vec(d, d.alpha[1 + y][1 + z], t0e(x)) +
                    detail::alpha_t0_vec(d, d.alpha[1 + z][1 + x], t0e(y));
            if (!is_zero_vec(s)) {
              iv_ok = false;
              wiv = "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
            }
          }
    }
    ds_check("ds_jacobi.i", i_ok, wi);
    ds_check("ds_jacobi.ii", ii_ok, wii);
    ds_check("ds_jacobi.iii", iii_ok, wiii);
    ds_check("ds_jacobi.iv", iv_ok, wiv);
  }

  return rep;
}

}  // namespace contactlab

#endif
