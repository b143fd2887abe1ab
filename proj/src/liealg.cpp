#include "cad/liealg.hpp"

#include <cmath>
#include <sstream>

#include "cad/errors.hpp"

namespace cad {

StructureConstants::StructureConstants(int dim, std::vector<double> flat)
    : dim_(dim), c_(std::move(flat)) {
  if (static_cast<int>(c_.size()) != dim * dim * dim)
    throw StructuralError("StructureConstants: flat size mismatch");
}

StructureConstants StructureConstants::zeros(int dim) {
  StructureConstants s;
  s.dim_ = dim;
  s.c_.assign(static_cast<std::size_t>(dim * dim * dim), 0.0);
  return s;
}

std::size_t StructureConstants::idx(int i, int j, int k) const {
  return static_cast<std::size_t>((i * dim_ + j) * dim_ + k);
}

void StructureConstants::set(int i, int j, int k, double v) { c_[idx(i, j, k)] = v; }

void StructureConstants::set_antisym(int i, int j, int k, double v) {
  c_[idx(i, j, k)] = v;
  c_[idx(j, i, k)] = -v;
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw StructuralError("StructureConstants::bracket: dimension mismatch");
  Vec out = Vec::Zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x(i) == 0.0) continue;
    for (int j = 0; j < dim_; ++j) {
      if (y(j) == 0.0) continue;
      for (int k = 0; k < dim_; ++k) out(k) += x(i) * y(j) * at(i, j, k);
    }
  }
  return out;
}

Mat StructureConstants::ad(const Vec& x) const {
  Mat m = Mat::Zero(dim_, dim_);
  for (int j = 0; j < dim_; ++j) {
    Vec ej = Vec::Zero(dim_);
    ej(j) = 1.0;
    m.col(j) = bracket(x, ej);
  }
  return m;
}

bool ValidationReport::passes(double tol) const {
  return antisymmetry <= tol && jacobi <= tol && ad_invariance <= tol && symmetry <= tol &&
         nondegenerate;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << "antisymmetry=" << antisymmetry << " jacobi=" << jacobi
     << " ad_invariance=" << ad_invariance << " symmetry=" << symmetry
     << " det(B)=" << det_b << " nondegenerate=" << (nondegenerate ? "yes" : "no");
  return os.str();
}

ValidationReport validate_algebra(const QuadraticLieAlgebra& a) {
  const int n = a.dim;
  if (a.c.dim() != n || a.B.rows() != n || a.B.cols() != n)
    throw StructuralError("validate_algebra: dimension mismatch");
  ValidationReport r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        r.antisymmetry = std::max(r.antisymmetry, std::abs(a.c.at(i, j, k) + a.c.at(j, i, k)));

  // Jacobi: [e_i,[e_j,e_k]] - [[e_i,e_j],e_k] - [e_j,[e_i,e_k]] = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double v = 0.0;
          for (int m = 0; m < n; ++m) {
            v += a.c.at(j, k, m) * a.c.at(i, m, l);
            v -= a.c.at(i, j, m) * a.c.at(m, k, l);
            v -= a.c.at(i, k, m) * a.c.at(j, m, l);
          }
          r.jacobi = std::max(r.jacobi, std::abs(v));
        }

  // <[e_i,e_j], e_k> + <e_j, [e_i,e_k]> = 0
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        for (int m = 0; m < n; ++m) {
          v += a.c.at(i, j, m) * a.B(m, k);
          v += a.c.at(i, k, m) * a.B(j, m);
        }
        r.ad_invariance = std::max(r.ad_invariance, std::abs(v));
      }

  r.symmetry = (a.B - a.B.transpose()).lpNorm<Eigen::Infinity>();
  r.det_b = a.B.determinant();
  r.nondegenerate = std::abs(r.det_b) > 1e-12;
  return r;
}

double ManinPair::isotropy_residual() const {
  return (g_basis.transpose() * algebra.B * g_basis).lpNorm<Eigen::Infinity>();
}

namespace {

double closure_residual_of(const QuadraticLieAlgebra& a, const Mat& basis) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < basis.cols(); ++i)
    for (Eigen::Index j = 0; j < basis.cols(); ++j) {
      Vec b = a.bracket(basis.col(i), basis.col(j));
      r = std::max(r, coords_in_span(basis, b).second);
    }
  return r;
}

}  // namespace

double ManinPair::closure_residual() const { return closure_residual_of(algebra, g_basis); }

bool ManinPair::half_dimensional() const {
  return 2 * static_cast<int>(g_basis.cols()) == algebra.dim;
}

double ManinTriple::gprime_isotropy_residual() const {
  return (gprime_basis.transpose() * algebra().B * gprime_basis).lpNorm<Eigen::Infinity>();
}

double ManinTriple::gprime_closure_residual() const {
  return closure_residual_of(algebra(), gprime_basis);
}

double ManinTriple::transversality_sigma() const {
  Mat both(algebra().dim, g_basis().cols() + gprime_basis.cols());
  both << g_basis(), gprime_basis;
  Eigen::JacobiSVD<Mat> svd(both);
  return svd.singularValues().minCoeff();
}

ManinTriple build_semiabelian_double(const StructureConstants& g_constants, double tol) {
  const int n = g_constants.dim();
  {
    QuadraticLieAlgebra probe{n, g_constants, Mat::Identity(n, n)};
    ValidationReport rep = validate_algebra(probe);
    if (rep.jacobi > tol || rep.antisymmetry > tol)
      throw InvalidInput("build_semiabelian_double: input constants fail Jacobi/antisymmetry");
  }
  const int d = 2 * n;
  StructureConstants c = StructureConstants::zeros(d);
  // [x, y] = [x, y]_g
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c.set(i, j, k, g_constants.at(i, j, k));
  // [e_i, f^j] = -sum_k c_g[i][k][j] f^k   (coadjoint action)
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        c.set(i, n + j, n + k, -g_constants.at(i, k, j));
        c.set(n + j, i, n + k, g_constants.at(i, k, j));
      }
  Mat B = Mat::Zero(d, d);
  B.block(0, n, n, n) = Mat::Identity(n, n);
  B.block(n, 0, n, n) = Mat::Identity(n, n);

  QuadraticLieAlgebra algebra{d, c, B};
  Mat g = Mat::Zero(d, n), gp = Mat::Zero(d, n);
  g.block(0, 0, n, n) = Mat::Identity(n, n);
  gp.block(n, 0, n, n) = Mat::Identity(n, n);
  return ManinTriple{ManinPair{algebra, g}, gp};
}

StructureConstants sc_abelian(int dim) { return StructureConstants::zeros(dim); }

StructureConstants sc_su2() {
  StructureConstants c = StructureConstants::zeros(3);
  c.set_antisym(0, 1, 2, 1.0);
  c.set_antisym(1, 2, 0, 1.0);
  c.set_antisym(2, 0, 1, 1.0);
  return c;
}

StructureConstants sc_solv2() {
  StructureConstants c = StructureConstants::zeros(2);
  c.set_antisym(0, 1, 1, 1.0);
  return c;
}

StructureConstants sc_heisenberg3() {
  StructureConstants c = StructureConstants::zeros(3);
  c.set_antisym(0, 1, 2, 1.0);
  return c;
}

ManinTriple build_abelian_double(int n) { return build_semiabelian_double(sc_abelian(n)); }

}  // namespace cad
