#include <doctest.h>

#include "contactlab/fuzz.hpp"
#include "contactlab/kform.hpp"

using namespace contactlab;

namespace {

KForm random_form(FuzzRng& rng, int n, int k) {
  KForm f(n, k);
  auto tuples = increasing_tuples(n, k);
  for (const auto& t : tuples)
    if (rng.range(0, 2) == 0) f.add_term(t, rng.small_rational());
  return f;
}

}  // namespace

TEST_CASE("sort_sign") {
  std::vector<int> a{0, 1};
  CHECK(sort_sign(a) == 1);
  std::vector<int> b{1, 0};
  CHECK(sort_sign(b) == -1);
  CHECK(b == std::vector<int>{0, 1});
  std::vector<int> c{2, 2};
  CHECK(sort_sign(c) == 0);
  std::vector<int> d{2, 0, 1};
  CHECK(sort_sign(d) == 1);  // two transpositions
}

TEST_CASE("wedge is graded antisymmetric") {
  KForm e1 = KForm::basis_dual(4, 0), e2 = KForm::basis_dual(4, 1);
  CHECK(e1.wedge(e2) == Rational(-1) * e2.wedge(e1));
  CHECK(e1.wedge(e1).is_zero());
  FuzzRng rng(67);
  for (int t = 0; t < 50; ++t) {
    int n = 5;
    int p = static_cast<int>(rng.range(1, 2)), q = static_cast<int>(rng.range(1, 2));
    KForm a = random_form(rng, n, p), b = random_form(rng, n, q);
    Rational sign((p * q) % 2 == 0 ? 1 : -1);
    CHECK(a.wedge(b) == sign * b.wedge(a));
    KForm c = random_form(rng, n, 1);
    CHECK(a.wedge(b.wedge(c)) == a.wedge(b).wedge(c));
  }
}

TEST_CASE("interior product") {
  KForm e12 = KForm::basis_dual(3, 0).wedge(KForm::basis_dual(3, 1));
  Vec v1(3), v2(3);
  v1[0] = Rational(1);
  v2[1] = Rational(1);
  CHECK(e12.interior(v1) == KForm::basis_dual(3, 1));
  CHECK(e12.interior(v2) == Rational(-1) * KForm::basis_dual(3, 0));
  // i_x is an antiderivation: i_x(a ^ b) = (i_x a)^b + (-1)^|a| a^(i_x b)
  FuzzRng rng(71);
  for (int t = 0; t < 50; ++t) {
    int n = 5;
    KForm a = random_form(rng, n, 1), b = random_form(rng, n, 2);
    Vec x(n);
    for (auto& c : x) c = rng.small_rational();
    KForm lhs = a.wedge(b).interior(x);
    KForm rhs = a.interior(x).wedge(b) + Rational(-1) * a.wedge(b.interior(x));
    CHECK(lhs == rhs);
    // i_x i_x = 0
    CHECK(b.interior(x).interior(x).is_zero());
  }
}

TEST_CASE("degree overflow clamps to the zero form") {
  // omega ^ omega for the h3 omega pulled to the 2-dim h: degree 4 > 2
  KForm omega = KForm::basis_dual(2, 0).wedge(KForm::basis_dual(2, 1));
  CHECK(omega.wedge(omega).is_zero());
  CHECK(omega.wedge(omega).degree() == 2);  // clamped
}

TEST_CASE("evaluation matches coefficient extraction") {
  FuzzRng rng(73);
  for (int t = 0; t < 50; ++t) {
    int n = 4, k = static_cast<int>(rng.range(1, 3));
    KForm f = random_form(rng, n, k);
    auto tuples = increasing_tuples(n, k);
    for (const auto& tup : tuples) {
      std::vector<Vec> basis_vecs;
      for (int idx : tup) {
        Vec v(n);
        v[idx] = Rational(1);
        basis_vecs.push_back(std::move(v));
      }
      CHECK(f.eval(basis_vecs) == f.coeff(tup));
    }
    // multilinearity spot check
    std::vector<Vec> vecs;
    for (int i = 0; i < k; ++i) {
      Vec v(n);
      for (auto& c : v) c = rng.small_rational();
      vecs.push_back(std::move(v));
    }
    auto scaled = vecs;
    scaled[0] = Rational(3) * scaled[0];
    CHECK(f.eval(scaled) == Rational(3) * f.eval(vecs));
  }
}
