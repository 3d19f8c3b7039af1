#pragma once

#include <optional>
#include <vector>

#include "projrep/liealg.hpp"

namespace projrep {

struct CentralData {
  int index = 0;       // basis index of the central element c
  double level = 1.0;  // π(c) = 2πi·level·I
};

// Basis elements mapped to skew-Hermitian matrices. For truncations of
// infinite-dimensional modules the homomorphism property only holds on the
// leading `exact_dim` basis states; the residual is measured there.
class Representation {
 public:
  Representation(AlgebraPtr alg, std::vector<Mat> matrices, std::optional<CentralData> central = std::nullopt,
                 Index exact_dim = -1, double skew_tol = 1e-10, double rep_tol = 1e-8);

  const AlgebraPtr& algebra() const { return alg_; }
  Index dim() const { return dim_; }
  Index exact_dim() const { return exact_dim_; }
  const std::optional<CentralData>& central() const { return central_; }
  // 1 when no central element is present.
  double level() const { return central_ ? central_->level : 1.0; }

  const Mat& basis(int i) const { return mats_[static_cast<std::size_t>(i)]; }
  Mat operator()(const Vec& x) const;
  Vec apply(const Vec& x, const Vec& psi) const;

  double skew_residual() const;
  double homomorphism_residual() const;
  double central_residual() const;

 private:
  AlgebraPtr alg_;
  std::vector<Mat> mats_;
  std::optional<CentralData> central_;
  Index dim_;
  Index exact_dim_;
};

}  // namespace projrep
