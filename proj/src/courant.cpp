#include "cad/courant.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cad/errors.hpp"
#include "cad/sampling.hpp"

namespace cad {

GenSection GenSection::make(VecField u, Form alpha) {
  if (alpha.deg() != 1) throw StructuralError("GenSection: alpha must be a 1-form");
  if (alpha.dim() != u.n) throw StructuralError("GenSection: chart mismatch");
  return GenSection{std::move(u), std::move(alpha)};
}

GenSection GenSection::vector(const VecField& u) { return make(u, Form(u.n, 1)); }

GenSection GenSection::covector(const Form& alpha) {
  return make(VecField::zero(alpha.dim()), alpha);
}

GenSection GenSection::operator+(const GenSection& o) const {
  GenSection r;
  r.u = u;
  for (int i = 0; i < u.n; ++i) r.u.comp[static_cast<std::size_t>(i)] += o.u.comp[static_cast<std::size_t>(i)];
  r.alpha = alpha + o.alpha;
  return r;
}

GenSection GenSection::operator-(const GenSection& o) const { return *this + o * (-1.0); }

GenSection GenSection::scale(const Poly& f) const {
  GenSection r;
  r.u = u;
  for (auto& c : r.u.comp) c = c * f;
  r.alpha = alpha.scale(f);
  return r;
}

GenSection GenSection::operator*(double s) const {
  GenSection r = *this;
  for (auto& c : r.u.comp) c *= s;
  r.alpha = r.alpha * s;
  return r;
}

double GenSection::eval_norm(std::span<const double> x) const {
  double m = 0.0;
  for (const auto& c : u.comp) m = std::max(m, std::abs(c.eval(x)));
  for (int i = 0; i < u.n; ++i) m = std::max(m, std::abs(alpha.component({i}).eval(x)));
  return m;
}

Poly pairing(const GenSection& s, const GenSection& t) {
  if (s.dim() != t.dim()) throw StructuralError("pairing: chart mismatch");
  Poly out;
  for (int i = 0; i < s.dim(); ++i) {
    out += s.alpha.component({i}) * t.u.comp[static_cast<std::size_t>(i)];
    out += t.alpha.component({i}) * s.u.comp[static_cast<std::size_t>(i)];
  }
  return out;
}

GenSection anchor_transpose(const Form& alpha) { return GenSection::covector(alpha); }

ClosedThreeForm::ClosedThreeForm(Form h, bool bypass_check) : h_(std::move(h)) {
  if (h_.deg() != 3) throw StructuralError("ClosedThreeForm: degree must be 3");
  if (!bypass_check) {
    double res = h_.d().max_abs_coef();
    double scale = std::max(1.0, h_.max_abs_coef());
    if (res > 1e-13 * scale) throw InvalidInput("ClosedThreeForm: dH != 0");
    checked_ = true;
  }
}

GenSection std_bracket(const GenSection& s, const GenSection& t) {
  if (s.dim() != t.dim()) throw StructuralError("std_bracket: chart mismatch");
  GenSection r;
  r.u = vf_bracket(s.u, t.u);
  r.alpha = t.alpha.lie(s.u) - s.alpha.d().interior(t.u);
  return r;
}

GenSection twisted_bracket(const GenSection& s, const GenSection& t, const ClosedThreeForm& h) {
  if (h.dim() != s.dim()) throw StructuralError("twisted_bracket: chart mismatch");
  GenSection r = std_bracket(s, t);
  // H(u, v, .) = i_v i_u H
  r.alpha = r.alpha + h.form().interior(s.u).interior(t.u);
  return r;
}

double AxiomReport::max() const {
  return std::max({jacobi, anchor, leibniz, invariance, antisymmetry});
}

namespace {

double section_max(const GenSection& s, const std::vector<std::vector<double>>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, s.eval_norm(p));
  return m;
}

double poly_max(const Poly& q, const std::vector<std::vector<double>>& pts) {
  double m = 0.0;
  for (const auto& p : pts) m = std::max(m, std::abs(q.eval(p)));
  return m;
}

}  // namespace

AxiomReport axiom_residuals(const ClosedThreeForm& h, const GenSection& s, const GenSection& t,
                            const GenSection& u, const Poly& f,
                            const std::vector<std::vector<double>>& pts) {
  AxiomReport rep;
  auto br = [&h](const GenSection& a, const GenSection& b) { return twisted_bracket(a, b, h); };

  // A: [s,[t,u]] = [[s,t],u] + [t,[s,u]]
  rep.jacobi = section_max(br(s, br(t, u)) - br(br(s, t), u) - br(t, br(s, u)), pts);

  // B: a([s,t]) = [a s, a t]
  {
    VecField lhs = br(s, t).u;
    VecField rhs = vf_bracket(s.u, t.u);
    GenSection diff = GenSection::vector(lhs) - GenSection::vector(rhs);
    rep.anchor = section_max(diff, pts);
  }

  // C: [s, f t] = f [s,t] + (a(s) f) t
  {
    Poly asf;
    for (int i = 0; i < s.dim(); ++i)
      asf += s.u.comp[static_cast<std::size_t>(i)] * f.derivative(static_cast<std::uint32_t>(i));
    GenSection lhs = br(s, t.scale(f));
    GenSection rhs = br(s, t).scale(f) + t.scale(asf);
    rep.leibniz = section_max(lhs - rhs, pts);
  }

  // D: a(s) <t,u> = <[s,t],u> + <t,[s,u]>
  {
    Poly tu = pairing(t, u);
    Poly lhs;
    for (int i = 0; i < s.dim(); ++i)
      lhs += s.u.comp[static_cast<std::size_t>(i)] * tu.derivative(static_cast<std::uint32_t>(i));
    Poly rhs = pairing(br(s, t), u) + pairing(t, br(s, u));
    lhs -= rhs;
    rep.invariance = poly_max(lhs, pts);
  }

  // E: [s,s] = a^t(d <s,s> / 2)
  {
    Poly ss = pairing(s, s);
    Form half_d = Form::scalar(s.dim(), ss).d() * 0.5;
    GenSection rhs = anchor_transpose(half_d);
    rep.antisymmetry = section_max(br(s, s) - rhs, pts);
  }
  return rep;
}

double LagrangianFrame::isotropy_residual(const std::vector<std::vector<double>>& pts) const {
  double m = 0.0;
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j)
      m = std::max(m, poly_max(pairing(sections[static_cast<std::size_t>(i)],
                                       sections[static_cast<std::size_t>(j)]),
                               pts));
  return m;
}

double LagrangianFrame::min_rank_sigma(const std::vector<std::vector<double>>& pts) const {
  double mn = std::numeric_limits<double>::infinity();
  int n = dim();
  for (const auto& p : pts) {
    Eigen::MatrixXd m(2 * n, size());
    for (int j = 0; j < size(); ++j) {
      const auto& s = sections[static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i) {
        m(i, j) = s.u.comp[static_cast<std::size_t>(i)].eval(p);
        m(n + i, j) = s.alpha.component({i}).eval(p);
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    mn = std::min(mn, svd.singularValues().minCoeff());
  }
  return mn;
}

LagrangianFrame LagrangianFrame::tangent(int n) {
  LagrangianFrame f;
  for (int i = 0; i < n; ++i) f.sections.push_back(GenSection::vector(VecField::basis(n, i)));
  return f;
}

LagrangianFrame LagrangianFrame::graph_of_two_form(const Form& omega) {
  if (omega.deg() != 2) throw InvalidInput("graph_of_two_form: omega must be a 2-form");
  int n = omega.dim();
  LagrangianFrame f;
  for (int i = 0; i < n; ++i) {
    VecField e = VecField::basis(n, i);
    f.sections.push_back(GenSection::make(e, omega.interior(e)));
  }
  return f;
}

const Poly& NonInvolutivity::at(int i, int j, int l) const {
  return h[static_cast<std::size_t>((i * k + j) * k + l)];
}

double NonInvolutivity::eval_max(const std::vector<std::vector<double>>& pts) const {
  double m = 0.0;
  for (const auto& q : h) m = std::max(m, poly_max(q, pts));
  return m;
}

NonInvolutivity noninvolutivity(const LagrangianFrame& frame, const ClosedThreeForm& h,
                                const std::vector<std::vector<double>>& isotropy_pts,
                                double isotropy_tol) {
  if (frame.isotropy_residual(isotropy_pts) > isotropy_tol)
    throw InvalidInput("noninvolutivity: frame is not isotropic");
  int k = frame.size();
  NonInvolutivity out;
  out.k = k;
  out.h.resize(static_cast<std::size_t>(k * k * k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      GenSection b = twisted_bracket(frame.sections[static_cast<std::size_t>(i)],
                                     frame.sections[static_cast<std::size_t>(j)], h);
      for (int l = 0; l < k; ++l)
        out.h[static_cast<std::size_t>((i * k + j) * k + l)] =
            pairing(b, frame.sections[static_cast<std::size_t>(l)]);
    }
  }
  return out;
}

ClosedThreeForm connection_curvature(const LagrangianFrame& sigma, const ClosedThreeForm& ambient_h) {
  int n = sigma.dim();
  if (sigma.size() != n) throw InvalidInput("connection_curvature: frame is not a splitting");
  // anchor must be the coordinate frame
  for (int i = 0; i < n; ++i) {
    const auto& s = sigma.sections[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      Poly expect = (i == j) ? Poly::constant(1.0) : Poly{};
      if (coef_distance(s.u.comp[static_cast<std::size_t>(j)], expect) > 0.0)
        throw InvalidInput("connection_curvature: anchor of frame is not the coordinate frame");
    }
  }
  Form h(n, 3);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      GenSection b = twisted_bracket(sigma.sections[static_cast<std::size_t>(i)],
                                     sigma.sections[static_cast<std::size_t>(j)], ambient_h);
      for (int l = j + 1; l < n; ++l) {
        Poly p = pairing(b, sigma.sections[static_cast<std::size_t>(l)]);
        if (!p.is_zero()) h.set_component({i, j, l}, std::move(p));
      }
    }
  return ClosedThreeForm(std::move(h));
}

LagrangianFrame shift_splitting(const LagrangianFrame& sigma, const Form& tau) {
  if (tau.deg() != 2) throw InvalidInput("shift_splitting: tau must be a 2-form");
  LagrangianFrame out;
  for (const auto& s : sigma.sections)
    out.sections.push_back(GenSection::make(s.u, s.alpha + tau.interior(s.u)));
  return out;
}

double dirac_leaf_check(const LagrangianFrame& l, const ClosedThreeForm& h, const Leaf& leaf,
                        const Form& beta, int samples, double tangency_tol) {
  if (beta.deg() != 2) throw InvalidInput("dirac_leaf_check: beta must be a 2-form");
  int m = leaf.src_dim;
  int n = h.dim();
  if (static_cast<int>(leaf.phi.size()) != n)
    throw StructuralError("dirac_leaf_check: leaf map arity mismatch");
  auto pts = halton_points(samples, m, leaf.box);

  // tangency of the leaf to a(L): d phi columns must lie in span{a(s_i)}
  for (const auto& y : pts) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = leaf.phi[static_cast<std::size_t>(i)].eval(y);
    Eigen::MatrixXd anchors(n, l.size());
    for (int j = 0; j < l.size(); ++j)
      for (int i = 0; i < n; ++i)
        anchors(i, j) = l.sections[static_cast<std::size_t>(j)].u.comp[static_cast<std::size_t>(i)].eval(x);
    for (int a = 0; a < m; ++a) {
      Eigen::VectorXd t(n);
      for (int i = 0; i < n; ++i)
        t(i) = leaf.phi[static_cast<std::size_t>(i)].derivative(static_cast<std::uint32_t>(a)).eval(y);
      Eigen::VectorXd c = anchors.completeOrthogonalDecomposition().solve(t);
      if ((anchors * c - t).lpNorm<Eigen::Infinity>() > tangency_tol)
        throw InvalidInput("dirac_leaf_check: leaf not tangent to a(L)");
    }
  }

  Form defect = beta.d() - h.form().pullback(leaf.phi, m);
  double res = 0.0;
  for (const auto& [idx, p] : defect.components()) res = std::max(res, poly_max(p, pts));
  return res;
}

}  // namespace cad
