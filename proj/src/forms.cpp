#include "cad/forms.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "cad/errors.hpp"
#include "cad/sampling.hpp"

namespace cad {

Chart Chart::cube(int n, double r) {
  Chart c;
  c.dim = n;
  c.box.assign(static_cast<std::size_t>(n), {-r, r});
  return c;
}

std::vector<std::vector<double>> Chart::sample_points(int count, int skip) const {
  return halton_points(count, dim, box, skip);
}

VecField VecField::zero(int n) {
  VecField u;
  u.n = n;
  u.comp.assign(static_cast<std::size_t>(n), Poly{});
  return u;
}

VecField VecField::basis(int n, int i) {
  VecField u = zero(n);
  u.comp[static_cast<std::size_t>(i)] = Poly::constant(1.0);
  return u;
}

std::vector<double> VecField::eval(std::span<const double> x) const {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)].eval(x);
  return v;
}

VecField vf_bracket(const VecField& u, const VecField& v) {
  if (u.n != v.n) throw StructuralError("vf_bracket: dimension mismatch");
  VecField w = VecField::zero(u.n);
  for (int i = 0; i < u.n; ++i) {
    Poly acc;
    for (int j = 0; j < u.n; ++j) {
      acc += u.comp[static_cast<std::size_t>(j)] *
             v.comp[static_cast<std::size_t>(i)].derivative(static_cast<std::uint32_t>(j));
      acc -= v.comp[static_cast<std::size_t>(j)] *
             u.comp[static_cast<std::size_t>(i)].derivative(static_cast<std::uint32_t>(j));
    }
    w.comp[static_cast<std::size_t>(i)] = acc;
  }
  return w;
}

int merge_indices(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
  out.clear();
  out.reserve(a.size() + b.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return 0;
    if (a[i] < b[j]) {
      out.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      if ((a.size() - i) % 2 == 1) sign = -sign;
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return sign;
}

int insert_index(int i, const std::vector<int>& rest, std::vector<int>& out) {
  std::vector<int> single{i};
  return merge_indices(single, rest, out);
}

Form::Form(int n, int k) : n_(n), k_(k) {
  if (k < 0 || n < 0) throw StructuralError("Form: negative degree or dimension");
}

Form Form::scalar(int n, Poly p) {
  Form f(n, 0);
  if (!p.is_zero()) f.comp_[{}] = std::move(p);
  return f;
}

Form Form::covector(int n, int i) {
  Form f(n, 1);
  f.comp_[{i}] = Poly::constant(1.0);
  return f;
}

Form Form::from_components(int n, int k, std::map<std::vector<int>, Poly> comp) {
  Form f(n, k);
  for (auto& [idx, p] : comp) {
    if (static_cast<int>(idx.size()) != k) throw StructuralError("Form: index arity mismatch");
    if (!std::is_sorted(idx.begin(), idx.end()) ||
        std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw StructuralError("Form: indices must be strictly increasing");
    for (int i : idx)
      if (i < 0 || i >= n) throw StructuralError("Form: index out of range");
    if (!p.is_zero()) f.comp_[idx] = std::move(p);
  }
  return f;
}

bool Form::is_zero() const {
  for (const auto& [idx, p] : comp_)
    if (!p.is_zero()) return false;
  return true;
}

double Form::max_abs_coef() const {
  double m = 0.0;
  for (const auto& [idx, p] : comp_) m = std::max(m, p.max_abs_coef());
  return m;
}

const Poly& Form::component(const std::vector<int>& idx) const {
  static const Poly kZero{};
  auto it = comp_.find(idx);
  return it == comp_.end() ? kZero : it->second;
}

void Form::set_component(std::vector<int> idx, Poly p) {
  if (static_cast<int>(idx.size()) != k_) throw StructuralError("Form: index arity mismatch");
  if (p.is_zero())
    comp_.erase(idx);
  else
    comp_[std::move(idx)] = std::move(p);
}

Form Form::operator+(const Form& o) const {
  if (n_ != o.n_ || k_ != o.k_) throw StructuralError("Form: +/- degree mismatch");
  Form out = *this;
  for (const auto& [idx, p] : o.comp_) {
    auto it = out.comp_.find(idx);
    if (it == out.comp_.end()) {
      out.comp_[idx] = p;
    } else {
      it->second += p;
      if (it->second.is_zero()) out.comp_.erase(it);
    }
  }
  return out;
}

Form Form::operator-(const Form& o) const { return *this + o * (-1.0); }

Form Form::operator*(double s) const {
  Form out = *this;
  for (auto& [idx, p] : out.comp_) p *= s;
  return out;
}

Form Form::scale(const Poly& f) const {
  Form out(n_, k_);
  for (const auto& [idx, p] : comp_) {
    Poly q = p * f;
    if (!q.is_zero()) out.comp_[idx] = std::move(q);
  }
  return out;
}

Form Form::wedge(const Form& o) const {
  if (n_ != o.n_) throw StructuralError("Form: wedge dimension mismatch");
  Form out(n_, k_ + o.k_);
  std::vector<int> merged;
  for (const auto& [ia, pa] : comp_) {
    for (const auto& [ib, pb] : o.comp_) {
      int sign = merge_indices(ia, ib, merged);
      if (sign == 0) continue;
      Poly q = pa * pb * static_cast<double>(sign);
      if (q.is_zero()) continue;
      auto it = out.comp_.find(merged);
      if (it == out.comp_.end())
        out.comp_[merged] = std::move(q);
      else {
        it->second += q;
        if (it->second.is_zero()) out.comp_.erase(it);
      }
    }
  }
  return out;
}

Form Form::d() const {
  Form out(n_, k_ + 1);
  std::vector<int> merged;
  for (const auto& [idx, p] : comp_) {
    for (int i = 0; i < n_; ++i) {
      Poly dp = p.derivative(static_cast<std::uint32_t>(i));
      if (dp.is_zero()) continue;
      int sign = insert_index(i, idx, merged);
      if (sign == 0) continue;
      dp *= static_cast<double>(sign);
      auto it = out.comp_.find(merged);
      if (it == out.comp_.end())
        out.comp_[merged] = std::move(dp);
      else {
        it->second += dp;
        if (it->second.is_zero()) out.comp_.erase(it);
      }
    }
  }
  return out;
}

Form Form::interior(const VecField& u) const {
  if (u.n != n_) throw StructuralError("Form: interior dimension mismatch");
  if (k_ == 0) return Form(n_, 0);
  Form out(n_, k_ - 1);
  for (const auto& [idx, p] : comp_) {
    for (std::size_t t = 0; t < idx.size(); ++t) {
      const Poly& ui = u.comp[static_cast<std::size_t>(idx[t])];
      if (ui.is_zero()) continue;
      Poly q = p * ui;
      if (t % 2 == 1) q *= -1.0;
      if (q.is_zero()) continue;
      std::vector<int> rest;
      rest.reserve(idx.size() - 1);
      for (std::size_t s = 0; s < idx.size(); ++s)
        if (s != t) rest.push_back(idx[s]);
      auto it = out.comp_.find(rest);
      if (it == out.comp_.end())
        out.comp_[std::move(rest)] = std::move(q);
      else {
        it->second += q;
        if (it->second.is_zero()) out.comp_.erase(it);
      }
    }
  }
  return out;
}

Form Form::lie(const VecField& u) const { return d().interior(u) + interior(u).d(); }

double Form::eval(std::span<const double> x, const std::vector<std::vector<double>>& vecs) const {
  if (static_cast<int>(vecs.size()) != k_) throw StructuralError("Form::eval: wrong vector count");
  double sum = 0.0;
  // det[ v_a^{i_b} ] over each increasing tuple
  for (const auto& [idx, p] : comp_) {
    Eigen::MatrixXd m(k_, k_);
    for (int a = 0; a < k_; ++a)
      for (int b = 0; b < k_; ++b)
        m(a, b) = vecs[static_cast<std::size_t>(a)][static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])];
    sum += p.eval(x) * m.determinant();
  }
  return sum;
}

Form Form::pullback(const std::vector<Poly>& phi, int src_dim) const {
  if (static_cast<int>(phi.size()) != n_) throw StructuralError("Form::pullback: map arity mismatch");
  Form out(src_dim, k_);
  // dx_i -> sum_a d phi_i / dy_a dy_a, coefficients composed with phi
  std::vector<Form> dphi;
  dphi.reserve(phi.size());
  for (const auto& p : phi) {
    Form df(src_dim, 1);
    for (int a = 0; a < src_dim; ++a) {
      Poly d = p.derivative(static_cast<std::uint32_t>(a));
      if (!d.is_zero()) df.set_component({a}, std::move(d));
    }
    dphi.push_back(std::move(df));
  }
  for (const auto& [idx, p] : comp_) {
    Form w = Form::scalar(src_dim, p.compose(phi));
    for (int i : idx) w = w.wedge(dphi[static_cast<std::size_t>(i)]);
    out = out + w;
  }
  return out;
}

double coef_distance(const Form& a, const Form& b) {
  Form d = a - b;
  return d.max_abs_coef();
}

}  // namespace cad
