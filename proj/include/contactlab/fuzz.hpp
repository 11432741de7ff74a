#ifndef CONTACTLAB_FUZZ_HPP
#define CONTACTLAB_FUZZ_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "contactlab/catalog.hpp"
#include "contactlab/constructions.hpp"
#include "contactlab/identities.hpp"

namespace contactlab {

/// splitmix64; fully deterministic across platforms, unlike the standard
/// library distributions.
class FuzzRng {
 public:
  explicit FuzzRng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Rational small_rational() {
    long num = range(-3, 3);
    long den = range(1, 2);
    return Rational(num, den);
  }

 private:
  std::uint64_t state_;
};

/// Random invertible matrix built from elementary operations; entries stay
/// small and the determinant is +/-1.
inline Matrix random_unimodular_matrix(FuzzRng& rng, int n) {
  Matrix p = Matrix::identity(n);
  int ops = n + static_cast<int>(rng.range(2, 2 + n));
  for (int t = 0; t < ops; ++t) {
    int i = static_cast<int>(rng.range(0, n - 1));
    int j = static_cast<int>(rng.range(0, n - 1));
    if (i == j) continue;
    if (rng.range(0, 3) == 0) {
      for (int k = 0; k < n; ++k) std::swap(p(i, k), p(j, k));
    } else {
      Rational c(rng.range(-2, 2));
      if (c.is_zero()) continue;
      for (int k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    }
  }
  return p;
}

/// Random invertible element of sp(2m) for the standard form on adjacent
/// pairs: A = -J0 S with S symmetric.
inline Matrix random_sp_invertible(FuzzRng& rng, int m) {
  int dq = 2 * m;
  Matrix j0(dq, dq);
  for (int i = 0; i < m; ++i) {
    j0(2 * i, 2 * i + 1) = Rational(1);
    j0(2 * i + 1, 2 * i) = Rational(-1);
  }
  for (;;) {
    Matrix s(dq, dq);
    for (int i = 0; i < dq; ++i)
      for (int j = i; j < dq; ++j) s(i, j) = s(j, i) = rng.small_rational();
    Matrix a = -j0 * s;
    if (!a.determinant().is_zero()) return a;
  }
}

inline Matrix random_traceless_2x2(FuzzRng& rng) {
  for (;;) {
    Matrix a(2, 2);
    a(0, 0) = rng.small_rational();
    a(1, 1) = -a(0, 0);
    a(0, 1) = rng.small_rational();
    a(1, 0) = rng.small_rational();
    if (!a.determinant().is_zero()) return a;
  }
}

struct FuzzInstance {
  LieAlgebra algebra;
  KForm eta;
  std::string description;
};

/// Deterministic generator over the constructions that provably stay inside
/// the contact class: basis changes of catalog entries, the two realization
/// procedures with random data, and contactization of perturbed symplectic
/// catalog algebras.
inline FuzzInstance fuzz_instance(std::uint64_t seed, std::uint64_t index, int max_dim = 0) {
  FuzzRng rng(seed * 0x100000001b3ull + index + 1);
  for (;;) {
    int mode = static_cast<int>(rng.range(0, 3));
    if (mode == 0) {
      static const std::vector<CatalogEntry> contact_entries = [] {
        std::vector<CatalogEntry> out;
        for (auto& e : catalog())
          if (e.contact_form && e.expected.count("jacobi") && e.expected.at("jacobi") == "valid")
            out.push_back(e);
        return out;
      }();
      const CatalogEntry& e = contact_entries[rng.range(0, static_cast<long>(contact_entries.size()) - 1)];
      if (max_dim > 0 && e.algebra.dim() > max_dim) continue;
      Matrix p = random_unimodular_matrix(rng, e.algebra.dim());
      LieAlgebra moved = basis_change(e.algebra, p);
      Vec eta_coeffs(e.algebra.dim());
      for (int j = 0; j < e.algebra.dim(); ++j) eta_coeffs[j] = e.contact_form->eval({p.column(j)});
      return {std::move(moved), KForm::one_form(eta_coeffs), "basis_change(" + e.name + ")"};
    }
    if (mode == 1) {
      int which = static_cast<int>(rng.range(0, 2));
      FrobeniusInput f = (which == 0) ? frobenius_aff() : build_an(which);
      if (max_dim > 0 && f.algebra().dim() + 3 > max_dim) continue;
      Realization r = realize_q2(f, random_traceless_2x2(rng));
      return {r.contact.algebra, r.contact.eta, "realize_q2(" + std::string(which == 0 ? "aff" : "a_n") + ")"};
    }
    if (mode == 2) {
      FrobeniusInput f = (rng.range(0, 1) == 0) ? frobenius_aff() : build_an(1);
      int m = static_cast<int>(rng.range(1, 2));
      if (max_dim > 0 && f.algebra().dim() + 1 + 2 * m > max_dim) continue;
      // The bracket-image line is the 1-dimensional ideal in both inputs.
      Vec z = f.algebra().basis_vector(f.algebra().dim() - 1);
      Realization r = realize_line_ideal(f, z, m, random_sp_invertible(rng, m));
      return {r.contact.algebra, r.contact.eta, "realize_line_ideal(m=" + std::to_string(m) + ")"};
    }
    // mode 3: contactization of a perturbed symplectic algebra.
    LieAlgebra h(4, {"e1", "e2", "e3", "e4"});
    h.add_term(0, 3, 0, Rational(-1));
    h.add_term(2, 3, 1, Rational(-1));
    KForm omega(4, 2);
    omega.add_term({0, 3}, Rational(1));
    omega.add_term({1, 2}, Rational(1));
    if (max_dim > 0 && 5 > max_dim) continue;
    Matrix p = random_unimodular_matrix(rng, 4);
    LieAlgebra moved = basis_change(h, p);
    KForm moved_omega(4, 2);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) moved_omega.add_term({i, j}, omega.eval({p.column(i), p.column(j)}));
    ContactStructure c = contactize(make_symplectic(moved, moved_omega));
    return {c.algebra, c.eta, "contactize(perturbed symplectic)"};
  }
}

struct FuzzSummary {
  int count = 0;
  int failures = 0;
  std::vector<std::string> lines;  // one deterministic line per instance
};

/// Runs main_theorem_audit + check_identities on each generated instance.
/// on_failure receives (instance, index) for artifact dumping.
inline FuzzSummary run_fuzz(std::uint64_t seed, int count, int max_dim = 0,
                            const std::function<void(const FuzzInstance&, int)>& on_failure = {}) {
  FuzzSummary sum;
  sum.count = count;
  for (int i = 0; i < count; ++i) {
    FuzzInstance inst = fuzz_instance(seed, static_cast<std::uint64_t>(i), max_dim);
    std::string line = std::to_string(i) + " " + inst.description;
    bool ok = true;
    try {
      ContactStructure c = make_contact(inst.algebra, inst.eta);
      MainTheoremAudit audit = main_theorem_audit(c);
      IdentityReport ir = check_identities(decompose(c));
      ok = audit.pass && ir.all_pass();
      line += ok ? " ok" : " FAIL";
      if (!ir.all_pass()) line += " (identities)";
      if (!audit.pass) line += " (main theorem)";
    } catch (const std::exception& ex) {
      ok = false;
      line += std::string(" FAIL (exception: ") + ex.what() + ")";
    }
    if (!ok) {
      ++sum.failures;
      if (on_failure) on_failure(inst, i);
    }
    sum.lines.push_back(std::move(line));
  }
  return sum;
}

}  // namespace contactlab

#endif
