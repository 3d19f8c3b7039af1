#pragma once

#include <vector>

#include "projrep/representation.hpp"

namespace projrep {

// g = exp(x_1)·exp(x_2)···exp(x_n); the empty word is the identity.
struct GroupWord {
  std::vector<Vec> factors;

  GroupWord() = default;
  explicit GroupWord(std::vector<Vec> f) : factors(std::move(f)) {}
  static GroupWord exp(const Vec& x) { return GroupWord({x}); }

  GroupWord operator*(const GroupWord& other) const;
  GroupWord inverse() const;
  bool empty() const { return factors.empty(); }
};

// Product of matrix exponentials of π(x_i).
Mat realize(const Representation& rep, const GroupWord& g);

// Ad_g = exp(ad x_1)···exp(ad x_n).
Mat adjoint_realization(const LieAlgebra& alg, const GroupWord& g);
// Ad_{g⁻¹} = exp(−ad x_n)···exp(−ad x_1).
Mat adjoint_inverse_realization(const LieAlgebra& alg, const GroupWord& g);

}  // namespace projrep
