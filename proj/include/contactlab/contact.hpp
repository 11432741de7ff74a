#ifndef CONTACTLAB_CONTACT_HPP
#define CONTACTLAB_CONTACT_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contactlab/ce_complex.hpp"
#include "contactlab/kform.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

/// eta ^ (d eta)^n as a top form; the contact condition is its nonvanishing.
inline KForm contact_top_form(const LieAlgebra& L, const KForm& eta) {
  int dim = L.dim();
  int n = (dim - 1) / 2;
  KForm deta = ce_differential(L, eta);
  KForm power(dim, 0);
  power.add_term({}, Rational(1));
  for (int i = 0; i < n; ++i) power = power.wedge(deta);
  return eta.wedge(power);
}

inline bool is_contact(const LieAlgebra& L, const KForm& eta) {
  L.require_jacobi("is_contact");
  if (L.dim() % 2 == 0) throw std::invalid_argument("is_contact: dimension must be odd");
  if (eta.degree() != 1 || eta.ambient_dim() != L.dim())
    throw std::invalid_argument("is_contact: eta must be a 1-form on the algebra");
  return !contact_top_form(L, eta).is_zero();
}

/// Unique xi with eta(xi) = 1 and i_xi d(eta) = 0, solved as an (n+1) x n
/// linear system; non-uniqueness is reported as degeneracy.
inline Vec reeb_vector(const LieAlgebra& L, const KForm& eta) {
  L.require_jacobi("reeb_vector");
  int n = L.dim();
  KForm deta = ce_differential(L, eta);
  Matrix sys(n + 1, n);
  Vec rhs(n + 1);
  for (int j = 0; j < n; ++j) sys(0, j) = eta.coeff({j});
  rhs[0] = Rational(1);
  // Row 1+j: (d eta)(xi, e_j) = 0, linear in xi.
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) sys(1 + j, i) = deta.coeff({i, j});
  auto sol = sys.solve_unique(rhs);
  if (!sol) throw std::domain_error("degenerate: Reeb system singular");
  return *sol;
}

/// Contact Lie algebra (g, eta) with its derived data:
/// Reeb vector, h = ker eta, omega = -d eta.
struct ContactStructure {
  LieAlgebra algebra;
  KForm eta;
  Vec reeb;
  std::vector<Vec> h_basis;  // RREF basis of ker eta
  KForm omega;               // -d eta (a 2-form on g; nondegenerate on h)
};

inline ContactStructure make_contact(const LieAlgebra& L, const KForm& eta) {
  if (!is_contact(L, eta)) throw std::domain_error("make_contact: eta is not a contact form");
  ContactStructure c{L, eta, reeb_vector(L, eta), {}, KForm(L.dim(), 2)};
  int n = L.dim();
  Matrix eta_row(1, n);
  for (int j = 0; j < n; ++j) eta_row(0, j) = eta.coeff({j});
  c.h_basis = eta_row.kernel_basis();
  c.omega = Rational(-1) * ce_differential(L, eta);
  // Invariants of the structure.
  if (eta.eval({c.reeb}) != Rational(1)) throw std::logic_error("make_contact: eta(xi) != 1");
  if (!ce_differential(L, eta).interior(c.reeb).is_zero())
    throw std::logic_error("make_contact: i_xi d eta != 0");
  int h_dim = static_cast<int>(c.h_basis.size());
  Matrix gram(h_dim, h_dim);
  for (int i = 0; i < h_dim; ++i)
    for (int j = 0; j < h_dim; ++j) gram(i, j) = c.omega.eval({c.h_basis[i], c.h_basis[j]});
  if (gram.rank() != h_dim) throw std::logic_error("make_contact: omega degenerate on ker eta");
  return c;
}

/// M_x = pr_h o ad_x |_h for x in ker(ad_xi |_h), with the projection along
/// R xi + h. Transverse unimodularity is tr(M_x) = 0 for all such x.
struct TransverseData {
  std::vector<Vec> kernel_basis;  // basis of ker(ad_xi |_h), ambient coordinates
  std::vector<Matrix> m_x;        // matrices on the h-basis
  std::vector<Rational> traces;
};

inline TransverseData transverse_data(const ContactStructure& c) {
  const LieAlgebra& L = c.algebra;
  int n = L.dim();
  int h_dim = static_cast<int>(c.h_basis.size());
  // Coordinates in the adapted basis (xi | h-basis).
  std::vector<Vec> cols{c.reeb};
  for (const auto& v : c.h_basis) cols.push_back(v);
  Matrix adapted = Matrix::from_columns(cols);
  Matrix to_adapted = adapted.inverse();
  // ad_xi restricted to h (h is ad_xi invariant for the Reeb vector).
  Matrix ad_xi_h(h_dim, h_dim);
  for (int j = 0; j < h_dim; ++j) {
    Vec w = to_adapted.apply(L.bracket(c.reeb, c.h_basis[j]));
    if (!w[0].is_zero()) throw std::logic_error("transverse_data: ker eta not ad_xi invariant");
    for (int i = 0; i < h_dim; ++i) ad_xi_h(i, j) = w[1 + i];
  }
  TransverseData out;
  for (const auto& k : ad_xi_h.kernel_basis()) {
    Vec x(n);
    for (int i = 0; i < h_dim; ++i)
      if (!k[i].is_zero()) x = x + k[i] * c.h_basis[i];
    Matrix m(h_dim, h_dim);
    for (int j = 0; j < h_dim; ++j) {
      Vec w = to_adapted.apply(L.bracket(x, c.h_basis[j]));
      for (int i = 0; i < h_dim; ++i) m(i, j) = w[1 + i];
    }
    out.traces.push_back(m.trace());
    out.m_x.push_back(std::move(m));
    out.kernel_basis.push_back(std::move(x));
  }
  return out;
}

struct TransverseVerdict {
  bool transversely_unimodular;
  std::optional<Vec> witness;  // x with tr(M_x) != 0
  Rational witness_trace;
};

inline TransverseVerdict is_transversely_unimodular(const ContactStructure& c) {
  TransverseData d = transverse_data(c);
  for (std::size_t i = 0; i < d.m_x.size(); ++i)
    if (!d.traces[i].is_zero()) return {false, d.kernel_basis[i], d.traces[i]};
  return {true, std::nullopt, Rational(0)};
}

// ---------------------------------------------------------------------------
// xi-basic complex
// ---------------------------------------------------------------------------

/// Basis of the degree-k basic forms {a : i_xi a = 0 and L_xi a = 0}.
inline std::vector<KForm> basic_forms(const ContactStructure& c, int k) {
  const LieAlgebra& L = c.algebra;
  int n = L.dim();
  auto dom = increasing_tuples(n, k);
  auto cod_int = increasing_tuples(n, k - 1);
  auto cod_lie = dom;
  int rows_int = (k >= 1) ? static_cast<int>(cod_int.size()) : 0;
  Matrix sys(rows_int + static_cast<int>(cod_lie.size()), static_cast<int>(dom.size()));
  for (std::size_t col = 0; col < dom.size(); ++col) {
    KForm basis(n, k);
    basis.add_term(dom[col], Rational(1));
    if (k >= 1) {
      Vec iv = basis.interior(c.reeb).coordinates(cod_int);
      for (int r = 0; r < rows_int; ++r) sys(r, static_cast<int>(col)) = iv[r];
    }
    Vec lv = lie_derivative(L, c.reeb, basis).coordinates(cod_lie);
    for (std::size_t r = 0; r < cod_lie.size(); ++r)
      sys(rows_int + static_cast<int>(r), static_cast<int>(col)) = lv[r];
  }
  std::vector<KForm> out;
  for (const auto& kv : sys.kernel_basis()) {
    KForm f(n, k);
    for (std::size_t t = 0; t < dom.size(); ++t)
      if (!kv[t].is_zero()) f.add_term(dom[t], kv[t]);
    out.push_back(std::move(f));
  }
  return out;
}

/// Per-degree bases of the basic subcomplex. d maps it to itself; asserted.
inline std::vector<std::vector<KForm>> basic_complex(const ContactStructure& c) {
  int n = c.algebra.dim();
  std::vector<std::vector<KForm>> out;
  for (int k = 0; k <= n; ++k) out.push_back(basic_forms(c, k));
  for (int k = 0; k < n; ++k)
    for (const auto& f : out[k]) {
      KForm df = ce_differential(c.algebra, f);
      if (!df.interior(c.reeb).is_zero() || !lie_derivative(c.algebra, c.reeb, df).is_zero())
        throw std::logic_error("basic_complex: d does not preserve the basic subcomplex");
    }
  return out;
}

/// Betti numbers of the basic subcomplex.
inline std::vector<int> basic_betti(const ContactStructure& c) {
  const LieAlgebra& L = c.algebra;
  int n = L.dim();
  auto complex_basis = basic_complex(c);
  // Matrix of d restricted to the basic forms, degree k -> k+1, expressed on
  // the basic bases.
  std::vector<int> ranks(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    const auto& dom = complex_basis[k];
    const auto& cod = complex_basis[k + 1];
    if (dom.empty()) continue;
    auto cod_tuples = increasing_tuples(n, k + 1);
    std::vector<Vec> cod_cols;
    for (const auto& f : cod) cod_cols.push_back(f.coordinates(cod_tuples));
    Matrix cod_mat = cod_cols.empty() ? Matrix(static_cast<int>(cod_tuples.size()), 0)
                                      : Matrix::from_columns(cod_cols);
    std::vector<Vec> image_cols;
    for (const auto& f : dom) {
      Vec img = ce_differential(L, f).coordinates(cod_tuples);
      if (cod.empty()) {
        if (!is_zero_vec(img)) throw std::logic_error("basic_betti: image escapes the subcomplex");
        image_cols.push_back(Vec{});
        continue;
      }
      auto sol = cod_mat.solve_any(img);
      if (!sol) throw std::logic_error("basic_betti: image escapes the subcomplex");
      image_cols.push_back(*sol);
    }
    if (!cod.empty()) ranks[k] = Matrix::from_columns(image_cols).rank();
  }
  std::vector<int> b(n + 1);
  for (int k = 0; k <= n; ++k) {
    int dim_k = static_cast<int>(complex_basis[k].size());
    int rank_prev = (k == 0) ? 0 : ranks[k - 1];
    b[k] = dim_k - ranks[k] - rank_prev;
  }
  return b;
}

/// The three equivalent conditions of the xi-in-commutator lemma, each
/// computed independently:
///   (i)  xi lies in [g,g];
///   (ii) every closed 1-form is xi-basic (H^1 classes have basic reps);
///   (iii) the basic class of omega = -d eta in H^2_B is nonzero.
struct XiCommutatorEquivalences {
  bool in_commutator;
  bool every_h1_class_has_basic_rep;
  bool omega_basic_class_nonzero;
  bool agree() const {
    return in_commutator == every_h1_class_has_basic_rep && in_commutator == omega_basic_class_nonzero;
  }
};

inline XiCommutatorEquivalences xi_commutator_equivalences(const ContactStructure& c) {
  const LieAlgebra& L = c.algebra;
  int n = L.dim();
  XiCommutatorEquivalences out{};
  out.in_commutator = contains_in_commutator(L, c.reeb);
  // (ii): closed 1-forms are the kernel of d_1; B^1 = 0, so classes are the
  // closed forms themselves. Check each kernel basis form is basic.
  out.every_h1_class_has_basic_rep = true;
  auto tuples1 = increasing_tuples(n, 1);
  for (const auto& kv : ce_differential_matrix(L, 1).kernel_basis()) {
    KForm f(n, 1);
    for (std::size_t t = 0; t < tuples1.size(); ++t)
      if (!kv[t].is_zero()) f.add_term(tuples1[t], kv[t]);
    if (!f.interior(c.reeb).is_zero() || !lie_derivative(L, c.reeb, f).is_zero()) {
      out.every_h1_class_has_basic_rep = false;
      break;
    }
  }
  // (iii): omega is basic and closed; nonzero in H^2_B iff it is not the
  // differential of a basic 1-form.
  auto tuples2 = increasing_tuples(n, 2);
  Vec omega_coords = c.omega.coordinates(tuples2);
  std::vector<Vec> dcols;
  for (const auto& f : basic_forms(c, 1)) dcols.push_back(ce_differential(L, f).coordinates(tuples2));
  if (dcols.empty()) {
    out.omega_basic_class_nonzero = !is_zero_vec(omega_coords);
  } else {
    out.omega_basic_class_nonzero = !Matrix::from_columns(dcols).solve_any(omega_coords).has_value();
  }
  return out;
}

}  // namespace contactlab

#endif
