#ifndef CONTACTLAB_FINGERPRINT_HPP
#define CONTACTLAB_FINGERPRINT_HPP

#include <string>
#include <vector>

#include "contactlab/ce_complex.hpp"
#include "contactlab/lie_algebra.hpp"

namespace contactlab {

/// Exact isomorphism invariants. Two algebras with different fingerprints are
/// non-isomorphic; equal fingerprints prove nothing (distinguisher, not a
/// certifier).
struct Fingerprint {
  int dim = 0;
  int center_dim = 0;
  std::vector<int> derived_dims;
  std::vector<int> lower_central_dims;
  bool solvable = false;
  bool nilpotent = false;
  bool unimodular = false;
  int killing_rank = 0;
  Signature killing_signature;
  std::vector<int> betti;

  friend bool operator==(const Fingerprint& a, const Fingerprint& b) {
    return a.dim == b.dim && a.center_dim == b.center_dim && a.derived_dims == b.derived_dims &&
           a.lower_central_dims == b.lower_central_dims && a.solvable == b.solvable &&
           a.nilpotent == b.nilpotent && a.unimodular == b.unimodular && a.killing_rank == b.killing_rank &&
           a.killing_signature == b.killing_signature && a.betti == b.betti;
  }
  friend bool operator!=(const Fingerprint& a, const Fingerprint& b) { return !(a == b); }

  std::string str() const {
    auto list = [](const std::vector<int>& v) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
      }
      return s + "]";
    };
    return "dim=" + std::to_string(dim) + " center=" + std::to_string(center_dim) +
           " derived=" + list(derived_dims) + " lcs=" + list(lower_central_dims) +
           " solv=" + std::to_string(solvable) + " nilp=" + std::to_string(nilpotent) +
           " unimod=" + std::to_string(unimodular) + " killing_rank=" + std::to_string(killing_rank) +
           " killing_sig=(" + std::to_string(killing_signature.positive) + "," +
           std::to_string(killing_signature.negative) + "," + std::to_string(killing_signature.zero) + ")" +
           " betti=" + list(betti);
  }
};

inline Fingerprint fingerprint(const LieAlgebra& L) {
  L.require_jacobi("fingerprint");
  Fingerprint f;
  f.dim = L.dim();
  f.center_dim = center(L).dim();
  for (const auto& s : derived_series(L)) f.derived_dims.push_back(s.dim());
  for (const auto& s : lower_central_series(L)) f.lower_central_dims.push_back(s.dim());
  f.solvable = f.derived_dims.back() == 0;
  f.nilpotent = f.lower_central_dims.back() == 0;
  f.unimodular = is_unimodular(L).unimodular;
  f.killing_signature = killing_signature(L);
  f.killing_rank = f.killing_signature.positive + f.killing_signature.negative;
  f.betti = betti_numbers(L);
  return f;
}

}  // namespace contactlab

#endif
