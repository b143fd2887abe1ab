#pragma once

#include <optional>
#include <vector>

#include "cad/liealg.hpp"

namespace cad {

// Principal matrix exponential / logarithm for small dense matrices.
// exp: scaling and squaring with a truncated series on the scaled argument;
// log: inverse scaling by Denman-Beavers square roots, then the series
// log(I + E). log is restricted to a neighborhood of the identity.
Mat mat_exp(const Mat& x);
Mat mat_log(const Mat& a, double tol = 1e-14, int max_sqrt = 48);

// Faithful matrix model of the double: generators represent the basis of d.
struct MatrixGroupModel {
  QuadraticLieAlgebra algebra;
  std::vector<Mat> generators;  // N x N each
  double tolerance = 1e-10;
  int max_iter = 50;

  // When set, the model has the block-affine layout [[R, v],[0, 1]] inside
  // rows/cols [0, affine_block): translations along the last column of the
  // block are the exp of the tagged translation generators. Enables the
  // closed-form semidirect factorization.
  struct AffineLayout {
    int block = 0;                       // size of the affine block incl. the 1
    std::vector<int> translation_gens;   // generator indices spanning the translations
  };
  std::optional<AffineLayout> affine;

  int matrix_size() const { return generators.empty() ? 0 : static_cast<int>(generators[0].rows()); }
  int dim() const { return algebra.dim; }

  Mat from_coords(const Vec& x) const;            // sum x_i E_i
  Vec to_coords(const Mat& x, double* residual = nullptr) const;  // least squares in span(E_i)
  Mat group_exp(const Vec& x) const;              // exp(sum x_i E_i)
  Vec group_log(const Mat& g) const;              // coords of log(g)

  // Ad_g x = g x g^{-1}, in d coordinates.
  Vec adjoint(const Mat& g, const Vec& x) const;
  Mat adjoint_matrix(const Mat& g) const;

  // max |[E_i, E_j] - sum_k c_ijk E_k|
  double commutator_residual() const;
};

struct FactorizeResult {
  Mat left;       // element of the first subgroup
  Mat right;      // element of the second subgroup
  Vec left_log;   // d-coordinates of log(left)
  Vec right_log;
  double residual = 0.0;
  int iterations = 0;
};

// Local factorization m = u * v with log(u) in span(left_alg) and log(v) in
// span(right_alg). Newton iteration on the log of the defect, seeded at the
// identity; closed-form shortcut when the model is block-affine and one
// factor is the translation subgroup. Throws DomainError when the iteration
// leaves the factorizable neighborhood.
FactorizeResult factorize(const Mat& m, const Mat& left_alg, const Mat& right_alg,
                          const MatrixGroupModel& model);

// Model builders for the shipped doubles. All satisfy
// commutator_residual() <= 1e-12 by construction.

// Abelian double of dimension 2n as translations of R^{2n}.
MatrixGroupModel abelian_double_model(int n);

// Semi-abelian double of g: affine action of G on g* plus, when g has a
// center, an extra faithful block for g. extra_g_rep holds matrices for the
// basis of g (may be empty when the coadjoint representation is faithful).
MatrixGroupModel semiabelian_double_model(const StructureConstants& g_constants,
                                          const std::vector<Mat>& extra_g_rep = {});

MatrixGroupModel su2_double_model();
MatrixGroupModel solv2_double_model();
MatrixGroupModel heisenberg_double_model();

}  // namespace cad
