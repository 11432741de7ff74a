#ifndef CONTACTLAB_STANDARD_ALGEBRAS_HPP
#define CONTACTLAB_STANDARD_ALGEBRAS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "contactlab/kform.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

/// aff(R), the nonabelian 2-dimensional algebra: [u,v] = v.
inline LieAlgebra aff_r() {
  LieAlgebra L(2, {"u", "v"});
  L.add_term(0, 1, 1, Rational(1));
  return L;
}

/// Heisenberg h_{2n+1} with [e_{2i-1}, e_{2i}] = e_{2n+1}; the contact form
/// is the last dual vector.
inline LieAlgebra heisenberg(int n) {
  if (n < 1) throw std::invalid_argument("heisenberg: n >= 1");
  int dim = 2 * n + 1;
  std::vector<std::string> labels;
  for (int i = 1; i <= 2 * n; ++i) labels.push_back("e" + std::to_string(i));
  labels.push_back("xi");
  LieAlgebra L(dim, labels);
  for (int i = 0; i < n; ++i) L.add_term(2 * i, 2 * i + 1, dim - 1, Rational(1));
  return L;
}

inline KForm heisenberg_eta(int n) { return KForm::basis_dual(2 * n + 1, 2 * n); }

/// sl(2,R) in the hyperbolic normal form [u,v] = xi, [xi,u] = u, [xi,v] = -v.
inline LieAlgebra sl2() {
  LieAlgebra L(3, {"xi", "u", "v"});
  L.add_term(1, 2, 0, Rational(1));
  L.add_term(0, 1, 1, Rational(1));
  L.add_term(0, 2, 2, Rational(-1));
  return L;
}

/// su(2) in the elliptic normal form [u,v] = xi, [xi,u] = v, [xi,v] = -u.
inline LieAlgebra su2() {
  LieAlgebra L(3, {"xi", "u", "v"});
  L.add_term(1, 2, 0, Rational(1));
  L.add_term(0, 1, 2, Rational(1));
  L.add_term(0, 2, 1, Rational(-1));
  return L;
}

enum class Dim5Label { G0Plus, G1Plus, G0Minus, G1Minus };

inline std::string dim5_label_str(Dim5Label l) {
  switch (l) {
    case Dim5Label::G0Plus: return "g0+";
    case Dim5Label::G1Plus: return "g1+";
    case Dim5Label::G0Minus: return "g0-";
    case Dim5Label::G1Minus: return "g1-";
  }
  return "?";
}

/// The four centerless 5-dimensional DS-contact normal forms on the basis
/// {xi, x, y, u, v}; eta = xi^* for each.
inline LieAlgebra dim5_normal_form(Dim5Label label) {
  LieAlgebra L(5, {"xi", "x", "y", "u", "v"});
  const Rational one(1), half(1, 2);
  L.add_term(1, 2, 0, one);  // [x,y] = xi + y
  L.add_term(1, 2, 2, one);
  bool plus = (label == Dim5Label::G0Plus || label == Dim5Label::G1Plus);
  bool elliptic = (label == Dim5Label::G0Plus || label == Dim5Label::G0Minus);
  L.add_term(3, 4, 0, one);  // [u,v] = xi (+ y in the minus family)
  if (!plus) L.add_term(3, 4, 2, one);
  if (elliptic) {
    L.add_term(0, 3, 4, one);   // [xi,u] = v
    L.add_term(0, 4, 3, -one);  // [xi,v] = -u
    L.add_term(2, 3, 4, -one);  // [y,u] = -v
    L.add_term(2, 4, 3, one);   // [y,v] = u
  } else {
    L.add_term(0, 3, 3, one);   // [xi,u] = u
    L.add_term(0, 4, 4, -one);  // [xi,v] = -v
    L.add_term(2, 3, 3, -one);  // [y,u] = -u
    L.add_term(2, 4, 4, one);   // [y,v] = v
  }
  if (!plus) {
    L.add_term(1, 3, 3, half);  // [x,u] = u/2
    L.add_term(1, 4, 4, half);  // [x,v] = v/2
  }
  return L;
}

inline KForm xi_dual_eta(const LieAlgebra& L) { return KForm::basis_dual(L.dim(), 0); }

/// Direct sum of ideals, block structure constants.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  int na = a.dim(), nb = b.dim();
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("a." + l);
  for (const auto& l : b.labels()) labels.push_back("b." + l);
  LieAlgebra out(na + nb, labels);
  for (const auto& [key, v] : a.structure()) {
    Vec w(na + nb);
    for (int k = 0; k < na; ++k) w[k] = v[k];
    out.set_bracket(key.first, key.second, std::move(w));
  }
  for (const auto& [key, v] : b.structure()) {
    Vec w(na + nb);
    for (int k = 0; k < nb; ++k) w[na + k] = v[k];
    out.set_bracket(na + key.first, na + key.second, std::move(w));
  }
  return out;
}

}  // namespace contactlab

#endif
