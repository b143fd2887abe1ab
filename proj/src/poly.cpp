#include "cad/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cad/errors.hpp"

namespace cad {

namespace {

Poly::Mono mono_mul(const Poly::Mono& a, const Poly::Mono& b) {
  Poly::Mono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].var == b[j].var) {
      out.push_back({a[i].var, a[i].exp + b[j].exp});
      ++i;
      ++j;
    } else if (a[i].var < b[j].var) {
      out.push_back(a[i++]);
    } else {
      out.push_back(b[j++]);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

Poly Poly::constant(double c) {
  Poly p;
  if (c != 0.0) p.terms_.push_back({{}, c});
  return p;
}

Poly Poly::var(std::uint32_t v, std::uint32_t e) {
  if (e == 0) return constant(1.0);
  Poly p;
  p.terms_.push_back({{{v, e}}, 1.0});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty());
}

double Poly::constant_value() const {
  if (terms_.empty()) return 0.0;
  if (!is_constant()) throw StructuralError("Poly: not a constant");
  return terms_[0].coef;
}

int Poly::degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) {
    int td = 0;
    for (const auto& ve : t.mono) td += static_cast<int>(ve.exp);
    d = std::max(d, td);
  }
  return d;
}

std::uint32_t Poly::num_vars() const {
  std::uint32_t n = 0;
  for (const auto& t : terms_)
    for (const auto& ve : t.mono) n = std::max(n, ve.var + 1);
  return n;
}

double Poly::max_abs_coef() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coef));
  return m;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0.0; });
  terms_ = std::move(out);
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].mono == o.terms_[j].mono) {
      double c = terms_[i].coef + o.terms_[j].coef;
      if (c != 0.0) merged.push_back({terms_[i].mono, c});
      ++i;
      ++j;
    } else if (terms_[i].mono < o.terms_[j].mono) {
      merged.push_back(terms_[i++]);
    } else {
      merged.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) merged.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) merged.push_back(o.terms_[j]);
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  Poly neg = o;
  neg *= -1.0;
  return *this += neg;
}

Poly& Poly::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  std::map<Poly::Mono, double> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[mono_mul(ta.mono, tb.mono)] += ta.coef * tb.coef;
  Poly out;
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0.0) out.terms_.push_back({m, c});
  return out;
}

bool Poly::same_terms(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Poly Poly::derivative(std::uint32_t v) const {
  Poly out;
  for (const auto& t : terms_) {
    for (std::size_t k = 0; k < t.mono.size(); ++k) {
      if (t.mono[k].var != v) continue;
      Term d;
      d.coef = t.coef * static_cast<double>(t.mono[k].exp);
      d.mono = t.mono;
      if (d.mono[k].exp == 1) {
        d.mono.erase(d.mono.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        d.mono[k].exp -= 1;
      }
      out.terms_.push_back(std::move(d));
    }
  }
  out.normalize();
  return out;
}

double Poly::eval(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& t : terms_) {
    double v = t.coef;
    for (const auto& ve : t.mono) {
      if (ve.var >= x.size()) throw StructuralError("Poly::eval: point dimension too small");
      double p = 1.0, base = x[ve.var];
      for (std::uint32_t e = 0; e < ve.exp; ++e) p *= base;
      v *= p;
    }
    sum += v;
  }
  return sum;
}

Poly Poly::pow(std::uint32_t e) const {
  Poly result = Poly::constant(1.0);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Poly Poly::compose(std::span<const Poly> subs) const {
  Poly out;
  for (const auto& t : terms_) {
    Poly term = Poly::constant(t.coef);
    for (const auto& ve : t.mono) {
      if (ve.var >= subs.size())
        throw StructuralError("Poly::compose: missing substitution for variable");
      term = term * subs[ve.var].pow(ve.exp);
    }
    out += term;
  }
  return out;
}

Poly Poly::pruned(double eps) const {
  Poly out = *this;
  std::erase_if(out.terms_, [eps](const Term& t) { return std::abs(t.coef) <= eps; });
  return out;
}

void PolyBuilder::add(const Poly::Mono& m, double c) {
  if (c != 0.0) terms_.push_back({m, c});
}

Poly PolyBuilder::take() {
  Poly p;
  p.terms_ = std::move(terms_);
  terms_.clear();
  p.normalize();
  return p;
}

double coef_distance(const Poly& a, const Poly& b) {
  Poly d = a;
  d -= b;
  return d.max_abs_coef();
}

}  // namespace cad
