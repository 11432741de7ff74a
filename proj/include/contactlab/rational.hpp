#ifndef CONTACTLAB_RATIONAL_HPP
#define CONTACTLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace contactlab {

/// Exact rational scalar. Always in lowest terms with positive denominator;
/// every operation is exact, nothing ever rounds.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(static_cast<long>(n)) {}

  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Accepts "p" or "p/q" (optionally signed), q > 0 after normalization.
  static Rational parse(const std::string& s) {
    auto bad = [&](const char* why) {
      throw std::invalid_argument("Rational: cannot parse \"" + s + "\": " + why);
    };
    if (s.empty()) bad("empty string");
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto digits_ok = [](const std::string& t, bool sign_allowed) {
      if (t.empty()) return false;
      std::size_t i = 0;
      if (sign_allowed && (t[0] == '-' || t[0] == '+')) i = 1;
      if (i == t.size()) return false;
      for (; i < t.size(); ++i)
        if (t[i] < '0' || t[i] > '9') return false;
      return true;
    };
    if (!digits_ok(num, true)) bad("bad numerator");
    if (!digits_ok(den, false)) bad("bad denominator");
    if (num[0] == '+') num = num.substr(1);  // mpz rejects a leading '+'
    mpz_class n(num), d(den);
    if (d == 0) bad("zero denominator");
    Rational r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
  }

  /// Canonical form: "p" when integral, else "p/q" in lowest terms, q > 0.
  std::string str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
  }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    r.v_ = 1 / v_;
    return r;
  }

 private:
  mpq_class v_;
};

using Vec = std::vector<Rational>;

inline bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Rational& c, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

inline std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace contactlab

#endif
