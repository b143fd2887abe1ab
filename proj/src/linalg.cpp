#include "cad/linalg.hpp"

#include "cad/errors.hpp"

namespace cad {

Mat pinv(const Mat& a) {
  return a.completeOrthogonalDecomposition().pseudoInverse();
}

std::pair<Vec, double> coords_in_span(const Mat& basis, const Vec& v) {
  Vec c = basis.completeOrthogonalDecomposition().solve(v);
  double res = (basis * c - v).lpNorm<Eigen::Infinity>();
  return {c, res};
}

double span_residual(const Mat& basis, const Mat& w) {
  double r = 0.0;
  for (Eigen::Index j = 0; j < w.cols(); ++j) r = std::max(r, coords_in_span(basis, w.col(j)).second);
  return r;
}

Mat lagrangian_complement(const Mat& B, const Mat& g_basis, const Mat& c_basis) {
  // h_a = x_a + G phi_a with <G phi_a, x_b> = -1/2 <x_a, x_b>.
  const Mat S = c_basis.transpose() * B * c_basis;
  const Mat M = g_basis.transpose() * B * c_basis;  // M^T phi_a = -1/2 S col a
  Eigen::FullPivLU<Mat> lu(M.transpose());
  if (!lu.isInvertible())
    throw InvalidInput("lagrangian_complement: complement not paired with g");
  const Mat Phi = lu.solve(-0.5 * S);
  return c_basis + g_basis * Phi;
}

double distance_to_span(const Mat& basis, const Vec& v) {
  return coords_in_span(basis, v).second;
}

}  // namespace cad
