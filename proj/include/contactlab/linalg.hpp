#ifndef CONTACTLAB_LINALG_HPP
#define CONTACTLAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "contactlab/matrix.hpp"
#include "contactlab/polynomial.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

/// Monic characteristic polynomial det(xI - m) by Faddeev-LeVerrier.
/// Exact over Q, no eigenvalue extraction.
inline Polynomial char_poly(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: non-square input");
  int n = m.rows();
  Vec c(n + 1);
  c[n] = Rational(1);
  if (n == 0) return Polynomial(std::move(c));
  Matrix mk = m;
  c[n - 1] = -mk.trace();
  for (int k = 2; k <= n; ++k) {
    Matrix t = mk;
    for (int i = 0; i < n; ++i) t(i, i) += c[n - k + 1];
    mk = m * t;
    c[n - k] = -(mk.trace() / Rational(static_cast<long>(k)));
  }
  return Polynomial(std::move(c));
}

/// Monic minimal polynomial: least d with m^d in span{I, m, ..., m^{d-1}}.
inline Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("minimal_polynomial: non-square input");
  int n = m.rows();
  if (n == 0) return Polynomial::constant(Rational(1));
  std::vector<Vec> powers;  // flattened m^0, m^1, ...
  Matrix p = Matrix::identity(n);
  powers.push_back(flatten(p));
  for (int d = 1; d <= n; ++d) {
    p = p * m;
    Vec target = flatten(p);
    Matrix sys = Matrix::from_columns(powers);
    if (auto sol = sys.solve_any(target)) {
      Vec coeffs(d + 1);
      for (int i = 0; i < d; ++i) coeffs[i] = -(*sol)[i];
      coeffs[d] = Rational(1);
      return Polynomial(std::move(coeffs));
    }
    powers.push_back(std::move(target));
  }
  throw std::logic_error("minimal_polynomial: Cayley-Hamilton violated");
}

/// Is m in span{I, a, a^2, ..., a^{n-1}}? (i.e. a polynomial in a)
inline bool in_polynomial_span(const Matrix& m, const Matrix& a) {
  int n = a.rows();
  std::vector<Vec> powers;
  Matrix p = Matrix::identity(n);
  for (int k = 0; k < n; ++k) {
    powers.push_back(flatten(p));
    p = p * a;
  }
  return Matrix::from_columns(powers).solve_any(flatten(m)).has_value();
}

struct JordanChevalley {
  Matrix semisimple;
  Matrix nilpotent;
};

/// Jordan-Chevalley decomposition m = S + N over Q, both polynomials in m.
/// Newton iteration x <- x - g(x) g'(x)^{-1} on g = squarefree_part(char_poly),
/// ceil(log2 n) + 1 steps; stays in Q, no factoring.
inline JordanChevalley jordan_chevalley(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("jordan_chevalley: non-square input");
  int n = m.rows();
  if (n == 0) return {m, m};
  Polynomial g = squarefree_part(char_poly(m));
  Polynomial gp = g.derivative();
  int iters = 1;
  while ((1 << iters) < n) ++iters;
  ++iters;
  Matrix d = m;
  for (int it = 0; it < iters; ++it) {
    Matrix gd = g.eval(d);
    if (gd.is_zero()) break;
    d = d - gp.eval(d).inverse() * gd;
  }
  Matrix nil = m - d;
  // Postconditions are part of the contract; violations are internal bugs.
  if (!commutator(d, nil).is_zero()) throw std::logic_error("jordan_chevalley: parts do not commute");
  if (!nil.pow(n).is_zero()) throw std::logic_error("jordan_chevalley: nilpotent part is not nilpotent");
  if (!squarefree_part(char_poly(d)).eval(d).is_zero())
    throw std::logic_error("jordan_chevalley: semisimple part has non-squarefree minimal polynomial");
  if (!in_polynomial_span(d, m)) throw std::logic_error("jordan_chevalley: S not a polynomial in m");
  return {std::move(d), std::move(nil)};
}

/// Basis of ker (m - lambda I)^n; empty when lambda is not an eigenvalue.
inline std::vector<Vec> generalized_eigenspace(const Matrix& m, const Rational& lambda) {
  if (!m.is_square()) throw std::invalid_argument("generalized_eigenspace: non-square input");
  int n = m.rows();
  Matrix shifted = m;
  for (int i = 0; i < n; ++i) shifted(i, i) -= lambda;
  return shifted.pow(n).kernel_basis();
}

/// Lexicographic pair basis of 2-vectors: (0,1), (0,2), ..., (d-2,d-1).
inline std::vector<std::pair<int, int>> pair_basis(int d) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) pairs.emplace_back(i, j);
  return pairs;
}

/// Induced operator on 2-vectors: (wedge^2 a)(u ^ v) = au ^ v + u ^ av,
/// in the lexicographic pair basis.
inline Matrix wedge_square_operator(const Matrix& a) {
  if (!a.is_square()) throw std::invalid_argument("wedge_square_operator: non-square input");
  int d = a.rows();
  auto pairs = pair_basis(d);
  int dim = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> pair_index(d, std::vector<int>(d, -1));
  for (int p = 0; p < dim; ++p) pair_index[pairs[p].first][pairs[p].second] = p;
  Matrix out(dim, dim);
  auto add = [&](int col, int i, int j, const Rational& c) {
    if (i == j || c.is_zero()) return;
    if (i < j)
      out(pair_index[i][j], col) += c;
    else
      out(pair_index[j][i], col) -= c;
  };
  for (int col = 0; col < dim; ++col) {
    auto [i, j] = pairs[col];
    for (int k = 0; k < d; ++k) {
      add(col, k, j, a(k, i));  // a e_i ^ e_j
      add(col, i, k, a(k, j));  // e_i ^ a e_j
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rational spectrum extraction (used to gate the eigenspace-level checks).
// ---------------------------------------------------------------------------

/// All positive divisors of |v|, or nullopt when |v| is too large to factor
/// by trial division within the budget.
inline std::optional<std::vector<mpz_class>> all_divisors(mpz_class v, std::int64_t budget = 2'000'000) {
  v = ::abs(v);
  if (v == 0) return std::nullopt;
  std::vector<std::pair<mpz_class, int>> factors;
  mpz_class d = 2;
  std::int64_t steps = 0;
  while (d * d <= v) {
    if (++steps > budget) return std::nullopt;
    if (v % d == 0) {
      int e = 0;
      while (v % d == 0) {
        v /= d;
        ++e;
      }
      factors.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (v > 1) factors.emplace_back(v, 1);
  std::vector<mpz_class> divs{1};
  for (auto& [p, e] : factors) {
    std::size_t sz = divs.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

struct RationalSpectrum {
  bool split = false;                  // char poly factors into rational linear factors
  bool certified = true;               // false if factoring budget was exceeded
  std::vector<Rational> eigenvalues;   // distinct, ascending
};

/// Distinct rational roots of char_poly(m); split iff the squarefree part
/// factors completely over Q.
inline RationalSpectrum rational_spectrum(const Matrix& m) {
  RationalSpectrum out;
  Polynomial g = squarefree_part(char_poly(m));
  // Clear denominators to a primitive integer polynomial.
  mpz_class den = 1;
  for (const auto& c : g.coefficients()) den = lcm(den, c.denominator());
  std::vector<mpz_class> ic;
  for (const auto& c : g.coefficients()) ic.push_back(c.numerator() * (den / c.denominator()));
  // Strip x^k factors: 0 is a root with multiplicity 1 in g.
  Polynomial work = g;
  if (g.coeff(0).is_zero()) {
    out.eigenvalues.push_back(Rational(0));
    work = g.divmod(Polynomial::x()).first;
  }
  while (work.degree() >= 1) {
    mpz_class d0 = 1, dl = 1;
    for (const auto& c : work.coefficients()) d0 = lcm(d0, c.denominator());
    Rational c0 = work.coeff(0), cl = work.leading();
    mpz_class num0 = c0.numerator() * (d0 / c0.denominator());
    mpz_class numl = cl.numerator() * (d0 / cl.denominator());
    auto divs_p = all_divisors(num0);
    auto divs_q = all_divisors(numl);
    if (!divs_p || !divs_q) {
      out.certified = false;
      out.split = false;
      return out;
    }
    bool found = false;
    for (const auto& p : *divs_p) {
      for (const auto& q : *divs_q) {
        for (int s : {1, -1}) {
          Rational cand(mpq_class(s * p, q));
          if (work.eval(cand).is_zero()) {
            out.eigenvalues.push_back(cand);
            Vec lin{-cand, Rational(1)};
            work = work.divmod(Polynomial(lin)).first;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;  // remaining factor has no rational root
  }
  out.split = (work.degree() <= 0);
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

}  // namespace contactlab

#endif
