#include "cad/matgroup.hpp"

#include <cmath>

#include "cad/errors.hpp"

namespace cad {

Mat mat_exp(const Mat& x) {
  const double norm = x.lpNorm<Eigen::Infinity>();
  int s = 0;
  if (norm > 0.25) s = static_cast<int>(std::ceil(std::log2(norm / 0.25)));
  Mat t = x / std::pow(2.0, s);
  Mat term = Mat::Identity(x.rows(), x.cols());
  Mat sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = term * t / static_cast<double>(k);
    sum += term;
    if (term.lpNorm<Eigen::Infinity>() < 1e-18 * std::max(1.0, sum.lpNorm<Eigen::Infinity>())) break;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

namespace {

// Denman-Beavers iteration for the principal square root.
Mat mat_sqrt_db(const Mat& a) {
  Mat y = a;
  Mat z = Mat::Identity(a.rows(), a.cols());
  for (int it = 0; it < 60; ++it) {
    Eigen::PartialPivLU<Mat> luy(y), luz(z);
    Mat yi = luy.inverse();
    Mat zi = luz.inverse();
    Mat yn = 0.5 * (y + zi);
    Mat zn = 0.5 * (z + yi);
    double step = (yn - y).lpNorm<Eigen::Infinity>();
    y = yn;
    z = zn;
    if (!y.allFinite() || !z.allFinite())
      throw DomainError("mat_log: square-root iteration broke down");
    if (step < 1e-16 * std::max(1.0, y.lpNorm<Eigen::Infinity>())) break;
  }
  if ((y * y - a).lpNorm<Eigen::Infinity>() > 1e-8 * std::max(1.0, a.lpNorm<Eigen::Infinity>()))
    throw DomainError("mat_log: square-root iteration did not converge");
  return y;
}

}  // namespace

Mat mat_log(const Mat& a, double tol, int max_sqrt) {
  if (a.rows() != a.cols()) throw StructuralError("mat_log: matrix must be square");
  if (!a.allFinite()) throw DomainError("mat_log: non-finite input");
  const Mat id = Mat::Identity(a.rows(), a.cols());
  Mat b = a;
  int s = 0;
  while ((b - id).lpNorm<Eigen::Infinity>() > 0.25) {
    if (++s > max_sqrt) throw DomainError("mat_log: outside principal-log neighborhood");
    b = mat_sqrt_db(b);
  }
  Mat e = b - id;
  Mat term = e;
  Mat sum = Mat::Zero(a.rows(), a.cols());
  for (int k = 1; k <= 200; ++k) {
    sum += term * (k % 2 == 1 ? 1.0 : -1.0) / static_cast<double>(k);
    term = term * e;
    if (term.lpNorm<Eigen::Infinity>() < tol) break;
  }
  return sum * std::pow(2.0, s);
}

Mat MatrixGroupModel::from_coords(const Vec& x) const {
  if (x.size() != dim()) throw StructuralError("from_coords: dimension mismatch");
  Mat m = Mat::Zero(matrix_size(), matrix_size());
  for (int i = 0; i < dim(); ++i) m += x(i) * generators[static_cast<std::size_t>(i)];
  return m;
}

Vec MatrixGroupModel::to_coords(const Mat& x, double* residual) const {
  const int nn = matrix_size() * matrix_size();
  Mat basis(nn, dim());
  for (int i = 0; i < dim(); ++i)
    basis.col(i) = Eigen::Map<const Vec>(generators[static_cast<std::size_t>(i)].data(), nn);
  Vec v = Eigen::Map<const Vec>(x.data(), nn);
  auto [c, res] = coords_in_span(basis, v);
  if (residual) *residual = res;
  return c;
}

Mat MatrixGroupModel::group_exp(const Vec& x) const { return mat_exp(from_coords(x)); }

Vec MatrixGroupModel::group_log(const Mat& g) const {
  double res = 0.0;
  Vec c = to_coords(mat_log(g), &res);
  if (res > 1e-8) throw DomainError("group_log: log not in the algebra span");
  return c;
}

Vec MatrixGroupModel::adjoint(const Mat& g, const Vec& x) const {
  Mat xm = from_coords(x);
  Mat conj = g * xm * g.partialPivLu().inverse();
  double res = 0.0;
  Vec c = to_coords(conj, &res);
  if (res > 1e-8) throw DomainError("adjoint: result not in the algebra span");
  return c;
}

Mat MatrixGroupModel::adjoint_matrix(const Mat& g) const {
  Mat out(dim(), dim());
  Mat gi = g.partialPivLu().inverse();
  for (int i = 0; i < dim(); ++i) {
    Mat conj = g * generators[static_cast<std::size_t>(i)] * gi;
    out.col(i) = to_coords(conj);
  }
  return out;
}

double MatrixGroupModel::commutator_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      Mat comm = generators[static_cast<std::size_t>(i)] * generators[static_cast<std::size_t>(j)] -
                 generators[static_cast<std::size_t>(j)] * generators[static_cast<std::size_t>(i)];
      for (int k = 0; k < dim(); ++k)
        comm -= algebra.c.at(i, j, k) * generators[static_cast<std::size_t>(k)];
      r = std::max(r, comm.lpNorm<Eigen::Infinity>());
    }
  return r;
}

namespace {

bool subalg_matches_translations(const Mat& alg_basis, const MatrixGroupModel& model) {
  if (!model.affine) return false;
  // columns of alg_basis must be supported on the translation generators
  for (Eigen::Index j = 0; j < alg_basis.cols(); ++j) {
    for (int i = 0; i < model.dim(); ++i) {
      bool is_trans = false;
      for (int t : model.affine->translation_gens)
        if (t == i) is_trans = true;
      if (!is_trans && std::abs(alg_basis(i, j)) > 0.0) return false;
    }
  }
  return static_cast<int>(alg_basis.cols()) ==
         static_cast<int>(model.affine->translation_gens.size());
}

}  // namespace

FactorizeResult factorize(const Mat& m, const Mat& left_alg, const Mat& right_alg,
                          const MatrixGroupModel& model) {
  const int d = model.dim();
  if (left_alg.rows() != d || right_alg.rows() != d)
    throw StructuralError("factorize: basis dimension mismatch");
  Mat split(d, left_alg.cols() + right_alg.cols());
  split << left_alg, right_alg;
  Eigen::FullPivLU<Mat> split_lu(split);
  if (!split_lu.isInvertible()) throw InvalidInput("factorize: subalgebras are not transverse");

  // Closed-form split for the block-affine layout when one factor is the
  // translation subgroup: m = [[R, v],[0,1]] = exp(translations(v)) * linear.
  auto closed_form = [&](bool left_is_trans) -> std::optional<FactorizeResult> {
    const auto& aff = *model.affine;
    const int nb = aff.block;
    Vec v = m.block(0, nb - 1, nb - 1, 1);
    if (!left_is_trans) {
      // m = linear * trans has affine column R * u; recover u.
      Mat r_block = m.block(0, 0, nb - 1, nb - 1);
      v = r_block.partialPivLu().solve(v);
    }
    // translation coordinates: solve v = sum_j t_j * (col of E_{t_j})
    Mat tb(nb - 1, static_cast<Eigen::Index>(aff.translation_gens.size()));
    for (std::size_t j = 0; j < aff.translation_gens.size(); ++j)
      tb.col(static_cast<Eigen::Index>(j)) =
          model.generators[static_cast<std::size_t>(aff.translation_gens[j])].block(0, nb - 1, nb - 1, 1);
    auto [tcoef, tres] = coords_in_span(tb, v);
    if (tres > 1e-12 * std::max(1.0, v.lpNorm<Eigen::Infinity>())) return std::nullopt;
    Vec tfull = Vec::Zero(d);
    for (std::size_t j = 0; j < aff.translation_gens.size(); ++j)
      tfull(aff.translation_gens[j]) = tcoef(static_cast<Eigen::Index>(j));
    Mat trans = model.group_exp(tfull);
    FactorizeResult r;
    if (left_is_trans) {
      r.left = trans;
      r.right = trans.partialPivLu().solve(m);
      r.left_log = tfull;
      r.right_log = model.group_log(r.right);
    } else {
      r.right = trans;
      r.left = m * trans.partialPivLu().inverse();
      r.right_log = tfull;
      r.left_log = model.group_log(r.left);
    }
    r.residual = (m - r.left * r.right).lpNorm<Eigen::Infinity>();
    r.iterations = 0;
    return r;
  };
  if (model.affine) {
    if (subalg_matches_translations(left_alg, model)) {
      if (auto r = closed_form(true)) return *r;
    } else if (subalg_matches_translations(right_alg, model)) {
      if (auto r = closed_form(false)) return *r;
    }
  }

  // Multiplicative Newton on the defect log: with m = u * exp(e) * v, split
  // e = e_left + e_right and fold the parts into the factors. The defect
  // shrinks quadratically near the identity.
  Mat u = Mat::Identity(m.rows(), m.cols());
  Mat v = u;
  FactorizeResult out;
  for (int it = 1; it <= model.max_iter; ++it) {
    Mat defect = u.partialPivLu().solve(m) * v.partialPivLu().inverse();
    Vec e;
    try {
      e = model.group_log(defect);
    } catch (const DomainError&) {
      throw DomainError("factorize: defect left the principal-log neighborhood");
    }
    Vec coords = split_lu.solve(e);
    u = u * model.group_exp(left_alg * coords.head(left_alg.cols()));
    v = model.group_exp(right_alg * coords.tail(right_alg.cols())) * v;
    double res = (m - u * v).lpNorm<Eigen::Infinity>();
    if (res <= model.tolerance) {
      out.left = u;
      out.right = v;
      out.left_log = model.group_log(u);
      out.right_log = model.group_log(v);
      out.residual = res;
      out.iterations = it;
      return out;
    }
  }
  throw DomainError("factorize: Newton iteration did not converge (point outside local chart)");
}

MatrixGroupModel abelian_double_model(int n) {
  ManinTriple t = build_abelian_double(n);
  const int d = 2 * n;
  const int N = d + 1;
  MatrixGroupModel m;
  m.algebra = t.algebra();
  for (int i = 0; i < d; ++i) {
    Mat e = Mat::Zero(N, N);
    e(i, N - 1) = 1.0;
    m.generators.push_back(e);
  }
  MatrixGroupModel::AffineLayout aff;
  aff.block = N;
  for (int i = n; i < d; ++i) aff.translation_gens.push_back(i);
  m.affine = aff;
  return m;
}

MatrixGroupModel semiabelian_double_model(const StructureConstants& g_constants,
                                          const std::vector<Mat>& extra_g_rep) {
  const int n = g_constants.dim();
  ManinTriple t = build_semiabelian_double(g_constants);
  const int extra = extra_g_rep.empty() ? 0 : static_cast<int>(extra_g_rep[0].rows());
  const int N = n + 1 + extra;
  MatrixGroupModel m;
  m.algebra = t.algebra();
  // coadjoint matrices: (M_i)_{kj} = -c_g[i][k][j]
  for (int i = 0; i < n; ++i) {
    Mat e = Mat::Zero(N, N);
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) e(k, j) = -g_constants.at(i, k, j);
    if (extra > 0) e.block(n + 1, n + 1, extra, extra) = extra_g_rep[static_cast<std::size_t>(i)];
    m.generators.push_back(e);
  }
  for (int j = 0; j < n; ++j) {
    Mat e = Mat::Zero(N, N);
    e(j, n) = 1.0;
    m.generators.push_back(e);
  }
  MatrixGroupModel::AffineLayout aff;
  aff.block = n + 1;
  for (int j = 0; j < n; ++j) aff.translation_gens.push_back(n + j);
  m.affine = aff;
  if (m.commutator_residual() > 1e-12)
    throw StructuralError("semiabelian_double_model: representation does not close");
  return m;
}

MatrixGroupModel su2_double_model() { return semiabelian_double_model(sc_su2()); }

MatrixGroupModel solv2_double_model() { return semiabelian_double_model(sc_solv2()); }

MatrixGroupModel heisenberg_double_model() {
  // The coadjoint representation kills the center; append the standard
  // nilpotent 3x3 representation of the Heisenberg algebra.
  std::vector<Mat> rep;
  Mat e1 = Mat::Zero(3, 3), e2 = Mat::Zero(3, 3), e3 = Mat::Zero(3, 3);
  e1(0, 1) = 1.0;
  e2(1, 2) = 1.0;
  e3(0, 2) = 1.0;
  rep = {e1, e2, e3};
  return semiabelian_double_model(sc_heisenberg3(), rep);
}

}  // namespace cad
