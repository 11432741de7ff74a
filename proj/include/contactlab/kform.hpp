#ifndef CONTACTLAB_KFORM_HPP
#define CONTACTLAB_KFORM_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contactlab/matrix.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

/// Sign of sorting an index list into strictly increasing order:
/// +1 / -1 by inversion parity, 0 when an index repeats. This is the single
/// audited source of exterior-algebra signs.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

/// Alternating k-linear form on an n-dimensional space, stored sparsely on
/// strictly increasing index tuples (absent tuple = 0).
class KForm {
 public:
  KForm() : n_(0), k_(0) {}
  KForm(int ambient_dim, int degree) : n_(ambient_dim), k_(degree) {
    if (degree < 0 || ambient_dim < 0) throw std::invalid_argument("KForm: negative degree or dimension");
  }

  /// Dual basis 1-form e^i.
  static KForm basis_dual(int ambient_dim, int i) {
    KForm f(ambient_dim, 1);
    f.add_term({i}, Rational(1));
    return f;
  }

  /// 1-form with the given coefficient vector.
  static KForm one_form(const Vec& coeffs) {
    KForm f(static_cast<int>(coeffs.size()), 1);
    for (int i = 0; i < f.n_; ++i)
      if (!coeffs[i].is_zero()) f.add_term({i}, coeffs[i]);
    return f;
  }

  int ambient_dim() const { return n_; }
  int degree() const { return k_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::vector<int>, Rational>& terms() const { return c_; }

  /// Adds c * e^{idx}; idx in any order, sign handled by sort_sign.
  void add_term(std::vector<int> idx, const Rational& c) {
    if (static_cast<int>(idx.size()) != k_) throw std::invalid_argument("KForm::add_term: wrong arity");
    for (int i : idx)
      if (i < 0 || i >= n_) throw std::invalid_argument("KForm::add_term: index out of range");
    if (c.is_zero()) return;
    int s = sort_sign(idx);
    if (s == 0) return;
    Rational& slot = c_[idx];
    slot += (s > 0) ? c : -c;
    if (slot.is_zero()) c_.erase(idx);
  }

  Rational coeff(std::vector<int> idx) const {
    int s = sort_sign(idx);
    if (s == 0) return Rational(0);
    auto it = c_.find(idx);
    if (it == c_.end()) return Rational(0);
    return (s > 0) ? it->second : -it->second;
  }

  friend bool operator==(const KForm& a, const KForm& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.c_ == b.c_;
  }
  friend bool operator!=(const KForm& a, const KForm& b) { return !(a == b); }

  KForm operator+(const KForm& o) const {
    require_compatible(o);
    KForm r = *this;
    for (const auto& [idx, c] : o.c_) {
      Rational& slot = r.c_[idx];
      slot += c;
      if (slot.is_zero()) r.c_.erase(idx);
    }
    return r;
  }

  KForm operator-(const KForm& o) const { return *this + (Rational(-1) * o); }

  friend KForm operator*(const Rational& s, const KForm& f) {
    KForm r(f.n_, f.k_);
    if (s.is_zero()) return r;
    for (const auto& [idx, c] : f.c_) r.c_[idx] = s * c;
    return r;
  }

  /// Graded-commutative wedge. When the degree would exceed the ambient
  /// dimension the result is the zero form of clamped degree.
  KForm wedge(const KForm& o) const {
    if (n_ != o.n_) throw std::invalid_argument("KForm::wedge: ambient dimension mismatch");
    int deg = k_ + o.k_;
    if (deg > n_) return KForm(n_, n_);
    KForm r(n_, deg);
    for (const auto& [ia, ca] : c_)
      for (const auto& [ib, cb] : o.c_) {
        std::vector<int> idx = ia;
        idx.insert(idx.end(), ib.begin(), ib.end());
        r.add_term(std::move(idx), ca * cb);
      }
    return r;
  }

  /// Interior product: antiderivation of degree -1.
  KForm interior(const Vec& x) const {
    if (static_cast<int>(x.size()) != n_) throw std::invalid_argument("KForm::interior: bad vector length");
    if (k_ == 0) return KForm(n_, 0);
    KForm r(n_, k_ - 1);
    for (const auto& [idx, c] : c_)
      for (std::size_t pos = 0; pos < idx.size(); ++pos) {
        if (x[idx[pos]].is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(idx.size() - 1);
        for (std::size_t t = 0; t < idx.size(); ++t)
          if (t != pos) rest.push_back(idx[t]);
        Rational coeff = c * x[idx[pos]];
        if (pos % 2 == 1) coeff = -coeff;
        r.add_term(std::move(rest), coeff);
      }
    return r;
  }

  /// Evaluates the form on k coordinate vectors (determinant expansion).
  Rational eval(const std::vector<Vec>& vectors) const {
    if (static_cast<int>(vectors.size()) != k_) throw std::invalid_argument("KForm::eval: wrong vector count");
    Rational total;
    for (const auto& [idx, c] : c_) {
      Matrix sub(k_, k_);
      for (int a = 0; a < k_; ++a)
        for (int b = 0; b < k_; ++b) sub(a, b) = vectors[b][idx[a]];
      total += c * sub.determinant();
    }
    return total;
  }

  /// Coefficient vector in the lexicographic basis of increasing k-tuples.
  Vec coordinates(const std::vector<std::vector<int>>& tuples) const {
    Vec v(tuples.size());
    for (std::size_t t = 0; t < tuples.size(); ++t) {
      auto it = c_.find(tuples[t]);
      if (it != c_.end()) v[t] = it->second;
    }
    return v;
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [idx, c] : c_) {
      if (!s.empty()) s += " + ";
      s += c.str() + "*e^(";
      for (std::size_t t = 0; t < idx.size(); ++t) {
        if (t) s += ",";
        s += std::to_string(idx[t] + 1);
      }
      s += ")";
    }
    return s;
  }

 private:
  void require_compatible(const KForm& o) const {
    if (n_ != o.n_ || k_ != o.k_) throw std::invalid_argument("KForm: degree/dimension mismatch");
  }

  int n_, k_;
  std::map<std::vector<int>, Rational> c_;
};

/// All strictly increasing k-tuples from {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> increasing_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int pos = k - 1;
    while (pos >= 0 && cur[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int t = pos + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

}  // namespace contactlab

#endif
