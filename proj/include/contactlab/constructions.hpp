#ifndef CONTACTLAB_CONSTRUCTIONS_HPP
#define CONTACTLAB_CONSTRUCTIONS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contactlab/analysis.hpp"
#include "contactlab/contact.hpp"
#include "contactlab/decomposition.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

/// Precondition failures of the constructive procedures (CLI exit 5).
class ConstructionError : public std::domain_error {
 public:
  explicit ConstructionError(const std::string& what) : std::domain_error(what) {}
};

/// Lie algebra with a closed nondegenerate 2-form.
struct SymplecticAlgebra {
  LieAlgebra algebra;
  KForm omega;
};

inline SymplecticAlgebra make_symplectic(const LieAlgebra& L, const KForm& omega) {
  L.require_jacobi("make_symplectic");
  if (L.dim() % 2 != 0) throw ConstructionError("make_symplectic: dimension must be even");
  if (omega.degree() != 2 || omega.ambient_dim() != L.dim())
    throw ConstructionError("make_symplectic: omega must be a 2-form on the algebra");
  if (!ce_differential(L, omega).is_zero()) throw ConstructionError("make_symplectic: omega is not closed");
  int n = L.dim();
  Matrix gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram(i, j) = omega.coeff({i, j});
  if (gram.rank() != n) throw ConstructionError("make_symplectic: omega is degenerate");
  return {L, omega};
}

/// Symplectic algebra whose form is exact, with the primitive stored as the
/// witness: omega = d(primitive).
struct FrobeniusInput {
  SymplecticAlgebra symplectic;
  KForm primitive;

  const LieAlgebra& algebra() const { return symplectic.algebra; }
  const KForm& omega() const { return symplectic.omega; }
};

inline FrobeniusInput make_frobenius(const LieAlgebra& L, const KForm& primitive) {
  if (primitive.degree() != 1) throw ConstructionError("make_frobenius: primitive must be a 1-form");
  KForm omega = ce_differential(L, primitive);
  return {make_symplectic(L, omega), primitive};
}

/// aff(R) with the exact symplectic form d(-v^*).
inline FrobeniusInput frobenius_aff() {
  return make_frobenius(aff_r(), Rational(-1) * KForm::basis_dual(2, 1));
}

// ---------------------------------------------------------------------------
// Contactization
// ---------------------------------------------------------------------------

/// 1-dimensional central extension by the symplectic cocycle:
/// [x,y]_g = omega(x,y) xi + [x,y]_h, [xi, h] = 0, eta = xi^*.
/// xi sits at index 0 of the extended basis.
inline ContactStructure contactize(const SymplecticAlgebra& s) {
  int d = s.algebra.dim();
  std::vector<std::string> labels{"xi"};
  for (const auto& l : s.algebra.labels()) labels.push_back(l);
  LieAlgebra g(d + 1, labels);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec hb = s.algebra.bracket_basis(i, j);
      Vec v(d + 1);
      v[0] = s.omega.coeff({i, j});
      for (int k = 0; k < d; ++k) v[1 + k] = hb[k];
      g.set_bracket(1 + i, 1 + j, std::move(v));
    }
  g.require_jacobi("contactize");
  KForm eta = KForm::basis_dual(d + 1, 0);
  ContactStructure c = make_contact(g, eta);
  if (c.reeb != g.basis_vector(0)) throw std::logic_error("contactize: Reeb vector is not xi");
  Subspace z = center(g);
  if (z != Subspace::span(d + 1, {g.basis_vector(0)}))
    throw std::logic_error("contactize: center is not R xi");
  return c;
}

/// Inverse direction for algebras with center R xi: the bracket drops to
/// h = ker eta and omega = -d eta restricts; contactizing the result gives
/// back the input in the adapted basis (xi | h-basis).
inline SymplecticAlgebra decontactize(const ContactStructure& c) {
  const LieAlgebra& L = c.algebra;
  if (center(L) != Subspace::span(L.dim(), {c.reeb}))
    throw ConstructionError("decontactize: center is not R xi");
  int hd = static_cast<int>(c.h_basis.size());
  std::vector<Vec> cols{c.reeb};
  for (const auto& v : c.h_basis) cols.push_back(v);
  Matrix to_adapted = Matrix::from_columns(cols).inverse();
  std::vector<std::string> labels;
  for (int i = 0; i < hd; ++i) labels.push_back("h" + std::to_string(i + 1));
  LieAlgebra h(hd, labels);
  KForm omega(hd, 2);
  for (int i = 0; i < hd; ++i)
    for (int j = i + 1; j < hd; ++j) {
      Vec w = to_adapted.apply(L.bracket(c.h_basis[i], c.h_basis[j]));
      Vec hv(hd);
      for (int k = 0; k < hd; ++k) hv[k] = w[1 + k];
      h.set_bracket(i, j, std::move(hv));
      omega.add_term({i, j}, c.omega.eval({c.h_basis[i], c.h_basis[j]}));
    }
  return make_symplectic(h, omega);
}

// ---------------------------------------------------------------------------
// Realizations
// ---------------------------------------------------------------------------

struct Realization {
  ContactStructure contact;
  std::vector<Vec> embedded_t0_basis;  // image of the Frobenius basis inside t0
  Rational z_scale{1};                 // scaling applied to z (line-ideal mode)
};

/// dim q = 2 realization: given Frobenius (a, omega_a = d alpha) and an
/// invertible traceless 2x2 A, builds R xi + a + q with
///   [xi,u] = Au, [x,y] = [x,y]_a, [u,v] = omega_q(u,v) xi, [a,q] = 0,
/// and eta = xi^* - alpha. The Frobenius algebra embeds into t0 as
/// x -> alpha(x) xi + x.
inline Realization realize_q2(const FrobeniusInput& f, const Matrix& a_op) {
  if (a_op.rows() != 2 || a_op.cols() != 2) throw ConstructionError("realize_q2: A must be 2x2");
  if (!a_op.trace().is_zero()) throw ConstructionError("realize_q2: tr A != 0 (A not in sp(2))");
  if (a_op.determinant().is_zero()) throw ConstructionError("realize_q2: A not invertible");
  const LieAlgebra& a = f.algebra();
  int da = a.dim();
  int n = da + 3;
  std::vector<std::string> labels{"xi"};
  for (const auto& l : a.labels()) labels.push_back(l);
  labels.push_back("u");
  labels.push_back("v");
  LieAlgebra g(n, labels);
  int iu = da + 1, iv = da + 2;
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) {
      Vec ab = a.bracket_basis(i, j);
      Vec v(n);
      for (int k = 0; k < da; ++k) v[1 + k] = ab[k];
      g.set_bracket(1 + i, 1 + j, std::move(v));
    }
  // [xi, u] = A u with A acting on the ordered basis (u, v).
  {
    Vec cu(n), cv(n);
    cu[iu] = a_op(0, 0);
    cu[iv] = a_op(1, 0);
    cv[iu] = a_op(0, 1);
    cv[iv] = a_op(1, 1);
    g.set_bracket(0, iu, std::move(cu));
    g.set_bracket(0, iv, std::move(cv));
  }
  {
    Vec uv(n);
    uv[0] = Rational(1);  // omega_q(u,v) = 1
    g.set_bracket(iu, iv, std::move(uv));
  }
  g.require_jacobi("realize_q2");

  Vec eta_coeffs(n);
  eta_coeffs[0] = Rational(1);
  for (int k = 0; k < da; ++k) eta_coeffs[1 + k] = -f.primitive.coeff({k});
  ContactStructure c = make_contact(g, KForm::one_form(eta_coeffs));
  if (c.reeb != g.basis_vector(0)) throw std::logic_error("realize_q2: Reeb vector is not xi");
  if (!is_ds_contact(c).ds) throw std::logic_error("realize_q2: output is not DS-contact");

  Realization r{std::move(c), {}, Rational(1)};
  for (int i = 0; i < da; ++i) {
    Vec emb(n);
    emb[0] = f.primitive.coeff({i});
    emb[1 + i] = Rational(1);
    r.embedded_t0_basis.push_back(std::move(emb));
  }
  return r;
}

/// Arbitrary even dim q = 2m realization for Frobenius algebras with a
/// one-dimensional ideal R z: rho(x) = (chi(x)/2) Id + alpha(x) A with
/// [u,v] = omega_q(u,v)(xi + z). z is rescaled so that alpha(z) = -1
/// (the applied scale is recorded); alpha(z) = 0 is impossible for genuine
/// Frobenius input and is rejected as inconsistent.
inline Realization realize_line_ideal(const FrobeniusInput& f, const Vec& z_in, int m, const Matrix& a_op) {
  const LieAlgebra& a = f.algebra();
  int da = a.dim();
  if (m < 1) throw ConstructionError("realize_line_ideal: m >= 1 required");
  if (is_zero_vec(z_in)) throw ConstructionError("realize_line_ideal: z = 0");
  Subspace line = Subspace::span(da, {z_in});
  if (!is_ideal(a, line)) throw ConstructionError("realize_line_ideal: z does not span an ideal");

  Rational alpha_z = f.primitive.eval({z_in});
  if (alpha_z.is_zero())
    throw ConstructionError(
        "realize_line_ideal: alpha(z) = 0 contradicts the nondegeneracy of omega_a (inconsistent input)");
  Rational scale = -alpha_z.inverse();
  Vec z = scale * z_in;

  // chi from [x, z] = chi(x) z on the basis.
  Vec chi(da);
  for (int i = 0; i < da; ++i) {
    Vec br = a.bracket(a.basis_vector(i), z);
    if (is_zero_vec(br)) continue;
    int pivot = -1;
    for (int k = 0; k < da; ++k)
      if (!z[k].is_zero()) {
        pivot = k;
        break;
      }
    chi[i] = br[pivot] / z[pivot];
    if (br != chi[i] * z) throw ConstructionError("realize_line_ideal: [x,z] not proportional to z");
  }

  int dq = 2 * m;
  if (a_op.rows() != dq || a_op.cols() != dq) throw ConstructionError("realize_line_ideal: A must be 2m x 2m");
  // Standard symplectic gram on adjacent pairs (q1,q2), (q3,q4), ...
  Matrix j0(dq, dq);
  for (int i = 0; i < m; ++i) {
    j0(2 * i, 2 * i + 1) = Rational(1);
    j0(2 * i + 1, 2 * i) = Rational(-1);
  }
  if (!(a_op.transpose() * j0 + j0 * a_op).is_zero())
    throw ConstructionError("realize_line_ideal: A not in sp(2m) for the standard form");
  if (a_op.determinant().is_zero()) throw ConstructionError("realize_line_ideal: A not invertible");

  int n = 1 + da + dq;
  std::vector<std::string> labels{"xi"};
  for (const auto& l : a.labels()) labels.push_back(l);
  for (int i = 1; i <= dq; ++i) labels.push_back("q" + std::to_string(i));
  LieAlgebra g(n, labels);

  Vec alpha_coeffs(da);
  for (int i = 0; i < da; ++i) alpha_coeffs[i] = f.primitive.coeff({i});

  // [x,y] = [x,y]_a + omega_a(x,y) xi.
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) {
      Vec ab = a.bracket_basis(i, j);
      Vec v(n);
      v[0] = f.omega().eval({a.basis_vector(i), a.basis_vector(j)});
      for (int k = 0; k < da; ++k) v[1 + k] = ab[k];
      g.set_bracket(1 + i, 1 + j, std::move(v));
    }
  // [xi, u] = A u.
  for (int j = 0; j < dq; ++j) {
    Vec v(n);
    for (int i = 0; i < dq; ++i) v[1 + da + i] = a_op(i, j);
    g.set_bracket(0, 1 + da + j, std::move(v));
  }
  // [x, u] = rho(x) u with rho(x) = (chi(x)/2) Id + alpha(x) A.
  for (int x = 0; x < da; ++x) {
    Matrix rho = Rational(chi[x] / Rational(2)) * Matrix::identity(dq) + alpha_coeffs[x] * a_op;
    for (int j = 0; j < dq; ++j) {
      Vec v(n);
      for (int i = 0; i < dq; ++i) v[1 + da + i] = rho(i, j);
      g.set_bracket(1 + x, 1 + da + j, std::move(v));
    }
  }
  // [u, v] = omega_q(u,v)(xi + z).
  for (int i = 0; i < dq; ++i)
    for (int j = i + 1; j < dq; ++j) {
      Rational w = j0(i, j);
      if (w.is_zero()) continue;
      Vec v(n);
      v[0] = w;
      for (int k = 0; k < da; ++k) v[1 + k] = w * z[k];
      g.set_bracket(1 + da + i, 1 + da + j, std::move(v));
    }
  g.require_jacobi("realize_line_ideal");

  ContactStructure c = make_contact(g, KForm::basis_dual(n, 0));
  if (c.reeb != g.basis_vector(0)) throw std::logic_error("realize_line_ideal: Reeb vector is not xi");
  if (!is_ds_contact(c).ds) throw std::logic_error("realize_line_ideal: output is not DS-contact");

  Realization r{std::move(c), {}, scale};
  for (int i = 0; i < da; ++i) {
    Vec emb(n);
    emb[1 + i] = Rational(1);
    r.embedded_t0_basis.push_back(std::move(emb));
  }
  return r;
}

// ---------------------------------------------------------------------------
// The a_n family
// ---------------------------------------------------------------------------

/// a_n = gl(n,R) |x R^n with lambda(X, u) = tr(TX) + b(u), T = diag(1..n),
/// b = (1,...,1); omega = d lambda is an exact symplectic form. The
/// translation part V is the unique minimal ideal, of dimension n.
inline FrobeniusInput build_an(int n) {
  if (n < 1) throw ConstructionError("build_an: n >= 1");
  int dim = n * n + n;
  auto eidx = [&](int i, int j) { return i * n + j; };  // E_{i+1, j+1}
  auto fidx = [&](int k) { return n * n + k; };
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  for (int k = 0; k < n; ++k) labels.push_back("f" + std::to_string(k + 1));
  LieAlgebra L(dim, labels);

  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          int p = eidx(i, j), q = eidx(k, l);
          if (p >= q) continue;
          Vec v(dim);
          if (j == k) v[eidx(i, l)] += Rational(1);
          if (l == i) v[eidx(k, j)] -= Rational(1);
          if (!is_zero_vec(v)) L.set_bracket(p, q, std::move(v));
        }
  // [E_ij, f_k] = d_jk f_i
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j != k) continue;
        Vec v(dim);
        v[fidx(i)] = Rational(1);
        L.set_bracket(eidx(i, j), fidx(k), std::move(v));
      }

  Vec lambda(dim);
  for (int i = 0; i < n; ++i) lambda[eidx(i, i)] = Rational(i + 1);  // tr(T X)
  for (int k = 0; k < n; ++k) lambda[fidx(k)] = Rational(1);         // b(u)
  FrobeniusInput f = make_frobenius(L, KForm::one_form(lambda));

  std::vector<Vec> vgens;
  for (int k = 0; k < n; ++k) vgens.push_back(L.basis_vector(fidx(k)));
  if (!is_ideal(L, Subspace::span(dim, vgens))) throw std::logic_error("build_an: V is not an ideal");
  return f;
}

enum class ObstructionVerdict { Excluded, NotExcludedByThisCriterion };

/// k^2 < nu(a) for some k >= 2 rules out dim q = 2k. nu must be supplied by
/// the caller (known for the input family, or certified externally).
inline ObstructionVerdict obstruction_check(int nu, int k) {
  if (k < 2)
    throw ConstructionError(
        "obstruction_check: criterion inapplicable for k < 2 (dim q = 2 is always realizable)");
  return (static_cast<long>(k) * k < nu) ? ObstructionVerdict::Excluded
                                         : ObstructionVerdict::NotExcludedByThisCriterion;
}

// ---------------------------------------------------------------------------
// eta twist
// ---------------------------------------------------------------------------

struct TwistResult {
  std::optional<ContactStructure> twisted;
  std::string failure;  // degeneracy witness when absent
};

/// eta_tau := eta - tau for tau supported on t0 (vanishing on R xi + q).
/// The twist is a contact form with the same Reeb vector iff both blocks of
/// -d eta_tau stay nondegenerate; the q-block is omega_q - tau o beta.
inline TwistResult twist_eta(const ContactDecomposition& d, const KForm& tau) {
  if (!d.ds) throw ConstructionError("twist_eta: input must be DS-contact");
  const LieAlgebra& L = d.contact.algebra;
  if (tau.degree() != 1 || tau.ambient_dim() != L.dim())
    throw ConstructionError("twist_eta: tau must be a 1-form on the algebra");
  if (!tau.eval({d.contact.reeb}).is_zero()) throw ConstructionError("twist_eta: tau(xi) != 0");
  for (const auto& u : d.q_basis)
    if (!tau.eval({u}).is_zero()) throw ConstructionError("twist_eta: tau does not vanish on q");

  KForm eta_tau = d.contact.eta - tau;
  int dq = d.dim_q();
  Matrix qblock(dq, dq);
  for (int i = 0; i < dq; ++i)
    for (int j = 0; j < dq; ++j)
      qblock(i, j) = d.omega_q(i, j) - tau.eval({d.t0_to_ambient(d.beta[i][j])});

  TwistResult out;
  if (qblock.rank() != dq) {
    auto ker = qblock.kernel_basis();
    out.failure = "omega_q - tau o beta degenerate, kernel contains q-vector " + vec_str(ker.front());
    return out;
  }
  if (!is_contact(L, eta_tau)) {
    out.failure = "t0-block omega_t + d tau degenerate";
    return out;
  }
  ContactStructure c = make_contact(L, eta_tau);
  if (c.reeb != d.contact.reeb) {
    out.failure = "twist changed the Reeb vector";
    return out;
  }
  out.twisted = std::move(c);
  return out;
}

}  // namespace contactlab

#endif
