#include <doctest.h>

#include "contactlab/fuzz.hpp"
#include "contactlab/polynomial.hpp"

using namespace contactlab;

namespace {

Polynomial random_poly(FuzzRng& rng, int max_deg) {
  Vec c(rng.range(0, max_deg) + 1);
  for (auto& x : c) x = rng.small_rational();
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial basics") {
  Polynomial p(Vec{Rational(2), Rational(-3), Rational(1)});  // x^2 - 3x + 2
  CHECK(p.degree() == 2);
  CHECK(p.str() == "x^2 - 3x + 2");
  CHECK(p.eval(Rational(1)).is_zero());
  CHECK(p.eval(Rational(2)).is_zero());
  CHECK(p.eval(Rational(0)) == Rational(2));
  CHECK(p.derivative() == Polynomial(Vec{Rational(-3), Rational(2)}));
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial(Vec{Rational(0), Rational(0)}).is_zero());  // trimmed
}

TEST_CASE("division with remainder") {
  FuzzRng rng(23);
  for (int t = 0; t < 200; ++t) {
    Polynomial a = random_poly(rng, 6);
    Polynomial b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    if (!r.is_zero()) CHECK(r.degree() < b.degree());
  }
  CHECK_THROWS_AS(Polynomial::x().divmod(Polynomial()), std::domain_error);
}

TEST_CASE("gcd divides both arguments") {
  FuzzRng rng(29);
  for (int t = 0; t < 100; ++t) {
    Polynomial a = random_poly(rng, 4), b = random_poly(rng, 4);
    Polynomial g = poly_gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK(a.divmod(g).second.is_zero());
    CHECK(b.divmod(g).second.is_zero());
    CHECK(g.is_monic());
  }
}

TEST_CASE("squarefree part frozen cases") {
  Polynomial x = Polynomial::x();
  CHECK(squarefree_part(x * x) == x);
  Polynomial x2p1(Vec{Rational(1), Rational(0), Rational(1)});
  CHECK(squarefree_part(x2p1) == x2p1);  // already squarefree
  // x^3 - x^2 = x^2 (x - 1) -> x(x-1) = x^2 - x, via the gcd oracle:
  Polynomial p(Vec{Rational(0), Rational(0), Rational(-1), Rational(1)});
  Polynomial g = poly_gcd(p, p.derivative());
  Polynomial expected = p.divmod(g).first.monic();
  CHECK(squarefree_part(p) == expected);
  CHECK(squarefree_part(p) == Polynomial(Vec{Rational(0), Rational(-1), Rational(1)}));
  CHECK_THROWS_AS(squarefree_part(Polynomial()), std::domain_error);
}

TEST_CASE("squarefree part has squarefree result with the same roots") {
  FuzzRng rng(31);
  for (int t = 0; t < 100; ++t) {
    Polynomial p = random_poly(rng, 3);
    if (p.is_zero()) continue;
    // force repeated factors sometimes
    if (rng.range(0, 1)) p = p * p;
    if (p.degree() == 0) continue;
    Polynomial s = squarefree_part(p);
    CHECK(poly_gcd(s, s.derivative()).degree() <= 0);  // squarefree
    CHECK(p.divmod(s).second.is_zero());               // s divides p
    for (long r = -4; r <= 4; ++r)                     // same rational roots on a window
      CHECK(p.eval(Rational(r)).is_zero() == s.eval(Rational(r)).is_zero());
  }
}
