#ifndef CONTACTLAB_LIE_ALGEBRA_HPP
#define CONTACTLAB_LIE_ALGEBRA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "contactlab/linalg.hpp"
#include "contactlab/matrix.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

struct JacobiViolation {
  int i, j, k;
  Vec residual;
};

class JacobiError : public std::domain_error {
 public:
  explicit JacobiError(const std::string& what) : std::domain_error(what) {}
};

/// Finite-dimensional real Lie algebra given by rational structure constants.
/// Only pairs i < j are stored, so antisymmetry holds by construction;
/// omitted pairs bracket to zero. The Jacobi identity is data, checked by
/// validate_jacobi; analyses gate on it.
class LieAlgebra {
 public:
  LieAlgebra() : dim_(0) {}

  LieAlgebra(int dim, std::vector<std::string> labels) : dim_(dim), labels_(std::move(labels)) {
    if (static_cast<int>(labels_.size()) != dim) throw std::invalid_argument("LieAlgebra: label count != dim");
  }

  static LieAlgebra abelian(int dim) {
    std::vector<std::string> labels;
    for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(dim, std::move(labels));
  }

  int dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::map<std::pair<int, int>, Vec>& structure() const { return structure_; }

  /// Sets [e_i, e_j] = value for i < j. Zero vectors are simply not stored.
  void set_bracket(int i, int j, Vec value) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_) throw std::invalid_argument("set_bracket: index out of range");
    if (i >= j) throw std::invalid_argument("set_bracket: requires i < j");
    if (static_cast<int>(value.size()) != dim_) throw std::invalid_argument("set_bracket: bad vector length");
    if (is_zero_vec(value))
      structure_.erase({i, j});
    else
      structure_[{i, j}] = std::move(value);
  }

  /// Convenience: add c * e_k to [e_i, e_j] (i < j).
  void add_term(int i, int j, int k, const Rational& c) {
    Vec v(dim_);
    auto it = structure_.find({i, j});
    if (it != structure_.end()) v = it->second;
    v[k] += c;
    set_bracket(i, j, std::move(v));
  }

  Vec bracket_basis(int i, int j) const {
    if (i == j) return Vec(dim_);
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = structure_.find({i, j});
    Vec v = (it == structure_.end()) ? Vec(dim_) : it->second;
    if (flip)
      for (auto& x : v) x = -x;
    return v;
  }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (int i = 0; i < dim_; ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < dim_; ++j) {
        if (y[j].is_zero() || i == j) continue;
        Vec b = bracket_basis(i, j);
        Rational c = x[i] * y[j];
        for (int k = 0; k < dim_; ++k)
          if (!b[k].is_zero()) r[k] += c * b[k];
      }
    }
    return r;
  }

  /// ad_x with columns [x, e_j].
  Matrix ad(const Vec& x) const {
    Matrix m(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
      Vec ej(dim_);
      ej[j] = Rational(1);
      Vec col = bracket(x, ej);
      for (int i = 0; i < dim_; ++i) m(i, j) = col[i];
    }
    return m;
  }

  Matrix ad_basis(int i) const {
    Vec x(dim_);
    x[i] = Rational(1);
    return ad(x);
  }

  Vec basis_vector(int i) const {
    Vec v(dim_);
    v[i] = Rational(1);
    return v;
  }

  std::vector<JacobiViolation> validate_jacobi() const {
    std::vector<JacobiViolation> out;
    for (int i = 0; i < dim_; ++i)
      for (int j = i + 1; j < dim_; ++j)
        for (int k = j + 1; k < dim_; ++k) {
          Vec r = bracket(bracket_basis(i, j), basis_vector(k)) +
                  bracket(bracket_basis(j, k), basis_vector(i)) +
                  bracket(bracket_basis(k, i), basis_vector(j));
          if (!is_zero_vec(r)) out.push_back({i, j, k, std::move(r)});
        }
    return out;
  }

  bool jacobi_valid() const { return validate_jacobi().empty(); }

  void require_jacobi(const char* who) const {
    auto v = validate_jacobi();
    if (!v.empty())
      throw JacobiError(std::string(who) + ": input violates the Jacobi identity on triple (" +
                        std::to_string(v[0].i) + "," + std::to_string(v[0].j) + "," + std::to_string(v[0].k) +
                        "), residual " + vec_str(v[0].residual));
  }

 private:
  int dim_;
  std::vector<std::string> labels_;
  std::map<std::pair<int, int>, Vec> structure_;
};

/// Subspace of a Lie algebra's underlying vector space, held in RREF so
/// equality of subspaces is entrywise equality of bases.
class Subspace {
 public:
  Subspace() : ambient_(0) {}
  explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span(int ambient, const std::vector<Vec>& gens) {
    Subspace s(ambient);
    if (gens.empty()) return s;
    auto rr = Matrix::from_rows(gens).rref();
    s.basis_ = Matrix(rr.rank, ambient);
    for (int i = 0; i < rr.rank; ++i)
      for (int j = 0; j < ambient; ++j) s.basis_(i, j) = rr.reduced(i, j);
    return s;
  }

  static Subspace full(int ambient) {
    std::vector<Vec> rows;
    for (int i = 0; i < ambient; ++i) {
      Vec v(ambient);
      v[i] = Rational(1);
      rows.push_back(std::move(v));
    }
    return span(ambient, rows);
  }

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }

  std::vector<Vec> basis_vectors() const {
    std::vector<Vec> out;
    for (int i = 0; i < basis_.rows(); ++i) out.push_back(basis_.row(i));
    return out;
  }

  bool contains(const Vec& v) const {
    if (is_zero_vec(v)) return true;
    if (dim() == 0) return false;
    std::vector<Vec> rows = basis_vectors();
    rows.push_back(v);
    return Matrix::from_rows(rows).rank() == dim();
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_vectors())
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  Subspace sum(const Subspace& other) const {
    auto rows = basis_vectors();
    for (auto& v : other.basis_vectors()) rows.push_back(v);
    return span(ambient_, rows);
  }

  /// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry the
  /// intersection in their right half.
  Subspace intersect(const Subspace& other) const {
    int n = ambient_;
    std::vector<Vec> rows;
    for (const auto& v : basis_vectors()) {
      Vec r(2 * n);
      for (int j = 0; j < n; ++j) r[j] = r[n + j] = v[j];
      rows.push_back(std::move(r));
    }
    for (const auto& v : other.basis_vectors()) {
      Vec r(2 * n);
      for (int j = 0; j < n; ++j) r[j] = v[j];
      rows.push_back(std::move(r));
    }
    if (rows.empty()) return Subspace(n);
    auto rr = Matrix::from_rows(rows).rref();
    std::vector<Vec> inter;
    for (int i = 0; i < rr.rank; ++i) {
      bool left_zero = true;
      for (int j = 0; j < n && left_zero; ++j)
        if (!rr.reduced(i, j).is_zero()) left_zero = false;
      if (!left_zero) continue;
      Vec v(n);
      for (int j = 0; j < n; ++j) v[j] = rr.reduced(i, n + j);
      if (!is_zero_vec(v)) inter.push_back(std::move(v));
    }
    return span(n, inter);
  }

 private:
  int ambient_;
  Matrix basis_;
};

// ---------------------------------------------------------------------------
// lie_core operations
// ---------------------------------------------------------------------------

inline Subspace center(const LieAlgebra& L) {
  L.require_jacobi("center");
  int n = L.dim();
  if (n == 0) return Subspace(0);
  Matrix stacked(n * n, n);
  for (int i = 0; i < n; ++i) {
    Matrix a = L.ad_basis(i);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return Subspace::span(n, stacked.kernel_basis());
}

inline Subspace bracket_span(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  std::vector<Vec> gens;
  for (const auto& x : a.basis_vectors())
    for (const auto& y : b.basis_vectors()) {
      Vec v = L.bracket(x, y);
      if (!is_zero_vec(v)) gens.push_back(std::move(v));
    }
  return Subspace::span(L.dim(), gens);
}

inline Subspace commutator_subalgebra(const LieAlgebra& L) {
  L.require_jacobi("commutator_subalgebra");
  std::vector<Vec> gens;
  for (const auto& [key, v] : L.structure()) gens.push_back(v);
  return Subspace::span(L.dim(), gens);
}

inline bool contains_in_commutator(const LieAlgebra& L, const Vec& v) {
  return commutator_subalgebra(L).contains(v);
}

inline std::vector<Subspace> derived_series(const LieAlgebra& L) {
  L.require_jacobi("derived_series");
  std::vector<Subspace> series{Subspace::full(L.dim())};
  for (;;) {
    Subspace next = bracket_span(L, series.back(), series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  L.require_jacobi("lower_central_series");
  Subspace full = Subspace::full(L.dim());
  std::vector<Subspace> series{full};
  for (;;) {
    Subspace next = bracket_span(L, full, series.back());
    if (next == series.back()) break;
    series.push_back(next);
    if (next.is_zero()) break;
  }
  return series;
}

inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }
inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

struct UnimodularVerdict {
  bool unimodular;
  std::optional<int> witness;  // basis index with tr(ad) != 0
  Rational witness_trace;
};

inline UnimodularVerdict is_unimodular(const LieAlgebra& L) {
  L.require_jacobi("is_unimodular");
  for (int i = 0; i < L.dim(); ++i) {
    Rational t = L.ad_basis(i).trace();
    if (!t.is_zero()) return {false, i, t};
  }
  return {true, std::nullopt, Rational(0)};
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& s) {
  L.require_jacobi("is_ideal");
  for (int i = 0; i < L.dim(); ++i)
    for (const auto& b : s.basis_vectors())
      if (!s.contains(L.bracket(L.basis_vector(i), b))) return false;
  return true;
}

inline Subspace ideal_closure(const LieAlgebra& L, const Vec& v) {
  L.require_jacobi("ideal_closure");
  Subspace s = Subspace::span(L.dim(), {v});
  for (;;) {
    std::vector<Vec> gens = s.basis_vectors();
    for (int i = 0; i < L.dim(); ++i)
      for (const auto& b : s.basis_vectors()) gens.push_back(L.bracket(L.basis_vector(i), b));
    Subspace next = Subspace::span(L.dim(), gens);
    if (next == s) return s;
    s = next;
  }
}

/// Upper bound on nu(L) = min dim of a nonzero ideal: minimum of
/// dim(ideal_closure(v)) over basis vectors, pairwise sums/differences,
/// and caller-supplied candidates. An upper bound only.
inline int minimal_ideal_dim_upper_bound(const LieAlgebra& L, const std::vector<Vec>& candidates = {}) {
  if (L.dim() == 0) throw std::invalid_argument("minimal_ideal_dim_upper_bound: zero algebra");
  std::vector<Vec> cands;
  for (int i = 0; i < L.dim(); ++i) cands.push_back(L.basis_vector(i));
  for (int i = 0; i < L.dim(); ++i)
    for (int j = i + 1; j < L.dim(); ++j) {
      cands.push_back(L.basis_vector(i) + L.basis_vector(j));
      cands.push_back(L.basis_vector(i) - L.basis_vector(j));
    }
  for (const auto& v : candidates) cands.push_back(v);
  int best = L.dim();
  for (const auto& v : cands) {
    if (is_zero_vec(v)) continue;
    int d = ideal_closure(L, v).dim();
    if (d < best) best = d;
  }
  return best;
}

inline Matrix killing_form(const LieAlgebra& L) {
  L.require_jacobi("killing_form");
  int n = L.dim();
  std::vector<Matrix> ads;
  for (int i = 0; i < n; ++i) ads.push_back(L.ad_basis(i));
  Matrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) b(i, j) = b(j, i) = (ads[i] * ads[j]).trace();
  return b;
}

struct Signature {
  int positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Signature& a, const Signature& b) {
    return a.positive == b.positive && a.negative == b.negative && a.zero == b.zero;
  }
};

/// Signature of a symmetric matrix by exact Gaussian congruence
/// (simultaneous row/column operations); no eigenvalues involved.
inline Signature symmetric_signature(Matrix s) {
  if (!s.is_square()) throw std::invalid_argument("symmetric_signature: non-square input");
  int n = s.rows();
  Signature sig;
  auto swap_rc = [&](int a, int b) {
    for (int j = 0; j < n; ++j) std::swap(s(a, j), s(b, j));
    for (int i = 0; i < n; ++i) std::swap(s(i, a), s(i, b));
  };
  auto add_rc = [&](int dst, int src, const Rational& f) {
    for (int j = 0; j < n; ++j) s(dst, j) += f * s(src, j);
    for (int i = 0; i < n; ++i) s(i, dst) += f * s(i, src);
  };
  for (int i = 0; i < n; ++i) {
    if (s(i, i).is_zero()) {
      int dj = -1;
      for (int j = i + 1; j < n; ++j)
        if (!s(j, j).is_zero()) {
          dj = j;
          break;
        }
      if (dj >= 0) {
        swap_rc(i, dj);
      } else {
        int oj = -1;
        for (int j = i + 1; j < n; ++j)
          if (!s(i, j).is_zero()) {
            oj = j;
            break;
          }
        if (oj < 0) {
          ++sig.zero;
          continue;
        }
        add_rc(i, oj, Rational(1));  // diag becomes 2*s(i,oj) != 0
      }
    }
    Rational d = s(i, i);
    for (int r = i + 1; r < n; ++r) {
      if (s(r, i).is_zero()) continue;
      add_rc(r, i, -(s(r, i) / d));
    }
    if (d.sign() > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

inline Signature killing_signature(const LieAlgebra& L) { return symmetric_signature(killing_form(L)); }

/// Change of basis: columns of p are the new basis vectors in old coordinates.
/// Returns the same algebra expressed in the new basis.
inline LieAlgebra basis_change(const LieAlgebra& L, const Matrix& p,
                               const std::vector<std::string>& new_labels = {}) {
  int n = L.dim();
  if (p.rows() != n || p.cols() != n) throw std::invalid_argument("basis_change: bad shape");
  Matrix pinv = p.inverse();
  std::vector<std::string> labels = new_labels;
  if (labels.empty())
    for (int i = 0; i < n; ++i) labels.push_back("f" + std::to_string(i + 1));
  LieAlgebra out(n, labels);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec br = pinv.apply(L.bracket(p.column(i), p.column(j)));
      out.set_bracket(i, j, std::move(br));
    }
  return out;
}

}  // namespace contactlab

#endif
