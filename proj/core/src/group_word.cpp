#include "projrep/group_word.hpp"

#include <algorithm>

namespace projrep {

GroupWord GroupWord::operator*(const GroupWord& other) const {
  GroupWord out = *this;
  out.factors.insert(out.factors.end(), other.factors.begin(), other.factors.end());
  return out;
}

GroupWord GroupWord::inverse() const {
  GroupWord out;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) out.factors.push_back(-*it);
  return out;
}

Mat realize(const Representation& rep, const GroupWord& g) {
  Mat u = Mat::Identity(rep.dim(), rep.dim());
  for (const auto& x : g.factors) {
    const Mat a = rep(x);
    const bool skew = (a + a.adjoint()).norm() <= 1e-12 * std::max(1.0, a.norm());
    u = u * (skew ? expm_skew(a) : expm(a));
  }
  return u;
}

Mat adjoint_realization(const LieAlgebra& alg, const GroupWord& g) {
  Mat m = Mat::Identity(alg.dim(), alg.dim());
  for (const auto& x : g.factors) m = m * expm(alg.adjoint(x));
  return m;
}

Mat adjoint_inverse_realization(const LieAlgebra& alg, const GroupWord& g) {
  Mat m = Mat::Identity(alg.dim(), alg.dim());
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it) m = m * expm(-alg.adjoint(*it));
  return m;
}

}  // namespace projrep
