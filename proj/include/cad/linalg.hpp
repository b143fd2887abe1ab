#pragma once

#include <Eigen/Dense>
#include <utility>

namespace cad {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Moore-Penrose pseudoinverse via complete orthogonal decomposition.
Mat pinv(const Mat& a);

// Least-squares coordinates of v in the column span of basis, plus the
// residual norm of the reconstruction.
std::pair<Vec, double> coords_in_span(const Mat& basis, const Vec& v);

// Max reconstruction residual over columns of w expressed in span(basis).
double span_residual(const Mat& basis, const Mat& w);

// Given a pairing B (symmetric, split signature), a Lagrangian subspace g
// (columns) and a complement c (columns, dim d - dim g... here dim g = dim c),
// returns the unique Lagrangian complement of g of the form
// { x + phi(x) : x in span(c), phi(x) in span(g) }.
Mat lagrangian_complement(const Mat& B, const Mat& g_basis, const Mat& c_basis);

// Frobenius-orthonormal projector residual: distance of v from span(basis).
double distance_to_span(const Mat& basis, const Vec& v);

}  // namespace cad
