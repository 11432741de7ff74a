#ifndef CONTACTLAB_POLYNOMIAL_HPP
#define CONTACTLAB_POLYNOMIAL_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "contactlab/matrix.hpp"
#include "contactlab/rational.hpp"

namespace contactlab {

/// Univariate polynomial over Rational, coefficients in ascending degree.
/// Normal form: no trailing zero coefficients (zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vec coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(const Rational& c) { return Polynomial(Vec{c}); }
  static Polynomial x() { return Polynomial(Vec{Rational(0), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero poly

  const Rational& coeff(int k) const {
    static const Rational kZero;
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
  }

  const Vec& coefficients() const { return c_; }

  Rational leading() const {
    if (is_zero()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
    return c_.back();
  }

  bool is_monic() const { return !is_zero() && leading() == Rational(1); }

  Polynomial monic() const {
    if (is_zero()) throw std::domain_error("Polynomial: cannot normalize zero polynomial");
    return leading().inverse() * *this;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial operator+(const Polynomial& o) const {
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
  }

  Polynomial operator-(const Polynomial& o) const {
    Vec r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(static_cast<int>(i)) - o.coeff(static_cast<int>(i));
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    Vec r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Polynomial(std::move(r));
  }

  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    Vec r(p.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = s * p.c_[i];
    return Polynomial(std::move(r));
  }

  /// Euclidean division: *this = q * d + r with deg r < deg d. Exact over Q.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    Vec rem = c_;
    Vec quot;
    int dd = d.degree();
    if (degree() >= dd) quot.assign(degree() - dd + 1, Rational(0));
    Rational lead_inv = d.leading().inverse();
    for (int k = degree(); k >= dd; --k) {
      Rational f = rem[k] * lead_inv;
      if (!f.is_zero()) {
        quot[k - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
      }
    }
    Polynomial r(std::move(rem));
    return {Polynomial(std::move(quot)), std::move(r)};
  }

  Polynomial derivative() const {
    if (degree() <= 0) return Polynomial();
    Vec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational r;
    for (int k = degree(); k >= 0; --k) r = r * x + c_[k];
    return r;
  }

  /// Matrix substitution by Horner. p(M) with p(0) mapped to p0 * I.
  Matrix eval(const Matrix& m) const {
    if (!m.is_square()) throw std::invalid_argument("Polynomial::eval: matrix must be square");
    int n = m.rows();
    Matrix r(n, n);
    for (int k = degree(); k >= 0; --k) {
      r = r * m;
      for (int i = 0; i < n; ++i) r(i, i) += c_[k];
    }
    return r;
  }

  /// Ordinary human-readable printing, e.g. "x^2 - 3x + 2".
  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
      const Rational& a = c_[k];
      if (a.is_zero()) continue;
      Rational mag = a.abs();
      if (s.empty())
        s += (a.sign() < 0) ? "-" : "";
      else
        s += (a.sign() < 0) ? " - " : " + ";
      bool unit = (mag == Rational(1));
      if (k == 0 || !unit) s += mag.str();
      if (k >= 1) s += "x";
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  Vec c_;
};

inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

/// p / gcd(p, p'), monic: same roots as p, each simple.
inline Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, p.derivative());
  auto [q, r] = p.divmod(g);
  if (!r.is_zero()) throw std::logic_error("squarefree_part: gcd does not divide");
  return q.monic();
}

}  // namespace contactlab

#endif
