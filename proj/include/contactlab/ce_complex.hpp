#ifndef CONTACTLAB_CE_COMPLEX_HPP
#define CONTACTLAB_CE_COMPLEX_HPP

#include <vector>

#include "contactlab/kform.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

/// d e^m = -sum_{i<j} c^m_{ij} e^i ^ e^j, the Chevalley-Eilenberg
/// differential on dual basis 1-forms.
inline KForm ce_differential_of_dual(const LieAlgebra& L, int m) {
  KForm d(L.dim(), 2);
  for (const auto& [key, v] : L.structure()) {
    if (v[m].is_zero()) continue;
    d.add_term({key.first, key.second}, -v[m]);
  }
  return d;
}

/// Extends d to arbitrary degree as an antiderivation:
/// d(e^{i1}^...^e^{ik}) = sum_r (-1)^{r-1} e^{i1}^...^(d e^{ir})^...^e^{ik}.
/// d^2 = 0 exactly when the Jacobi identity holds.
inline KForm ce_differential(const LieAlgebra& L, const KForm& a) {
  L.require_jacobi("ce_differential");
  int n = L.dim();
  KForm out(n, a.degree() + 1);
  if (a.degree() + 1 > n) return out;
  std::vector<KForm> dgen;
  for (int m = 0; m < n; ++m) dgen.push_back(ce_differential_of_dual(L, m));
  for (const auto& [idx, c] : a.terms()) {
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Rational sgn_c = (r % 2 == 0) ? c : -c;
      for (const auto& [pq, b] : dgen[idx[r]].terms()) {
        std::vector<int> list;
        list.reserve(idx.size() + 1);
        for (std::size_t t = 0; t < r; ++t) list.push_back(idx[t]);
        list.push_back(pq[0]);
        list.push_back(pq[1]);
        for (std::size_t t = r + 1; t < idx.size(); ++t) list.push_back(idx[t]);
        out.add_term(std::move(list), sgn_c * b);
      }
    }
  }
  return out;
}

/// Matrix of d_k : Lambda^k -> Lambda^{k+1} in the lexicographic tuple bases.
inline Matrix ce_differential_matrix(const LieAlgebra& L, int k) {
  int n = L.dim();
  auto dom = increasing_tuples(n, k);
  auto cod = increasing_tuples(n, k + 1);
  Matrix m(static_cast<int>(cod.size()), static_cast<int>(dom.size()));
  for (std::size_t col = 0; col < dom.size(); ++col) {
    KForm basis(n, k);
    basis.add_term(dom[col], Rational(1));
    Vec img = ce_differential(L, basis).coordinates(cod);
    for (std::size_t row = 0; row < cod.size(); ++row) m(static_cast<int>(row), static_cast<int>(col)) = img[row];
  }
  return m;
}

/// Cartan formula L_x = d o i_x + i_x o d.
inline KForm lie_derivative(const LieAlgebra& L, const Vec& x, const KForm& a) {
  if (a.degree() == 0) return KForm(a.ambient_dim(), 0);  // constants are invariant
  return ce_differential(L, a.interior(x)) + ce_differential(L, a).interior(x);
}

/// Betti numbers b_0..b_n of the Chevalley-Eilenberg complex with trivial
/// coefficients, via exact ranks.
inline std::vector<int> betti_numbers(const LieAlgebra& L) {
  L.require_jacobi("betti_numbers");
  int n = L.dim();
  std::vector<int> ranks(n + 1, 0);  // ranks[k] = rank of d_k
  for (int k = 0; k < n; ++k) ranks[k] = ce_differential_matrix(L, k).rank();
  std::vector<int> b(n + 1);
  auto binom = [&](int k) {
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return static_cast<int>(r);
  };
  for (int k = 0; k <= n; ++k) {
    int dim_k = binom(k);
    int rank_prev = (k == 0) ? 0 : ranks[k - 1];
    b[k] = dim_k - ranks[k] - rank_prev;
  }
  return b;
}

}  // namespace contactlab

#endif
