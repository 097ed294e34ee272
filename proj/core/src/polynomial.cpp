#include "vform/polynomial.hpp"

#include <stdexcept>

namespace vform {

namespace {

void require_dim(int dim) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("Polynomial: dim must be 2 or 3");
}

void require_valid_exponents(int dim, const Exponents& m) {
  for (int a = 0; a < 3; ++a) {
    if (m[a] < 0) throw std::invalid_argument("Polynomial: negative exponent");
    if (a >= dim && m[a] != 0)
      throw std::invalid_argument("Polynomial: exponent beyond spatial dimension");
  }
}

} // namespace

Polynomial::Polynomial(int dim) : dim_(dim) { require_dim(dim); }

Polynomial Polynomial::constant(int dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term({0, 0, 0}, c);
  return p;
}

Polynomial Polynomial::monomial(int dim, const Exponents& m, const Rational& c) {
  Polynomial p(dim);
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, total_degree(m));
  return deg;
}

void Polynomial::add_term(const Exponents& m, const Rational& c) {
  require_valid_exponents(dim_, m);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("Polynomial: dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("Polynomial: dimension mismatch");
  Polynomial out(a.dim());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      Exponents m = {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out.add_term(m, ca * cb);
    }
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(dim_);
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Polynomial Polynomial::diff(int axis) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("Polynomial: diff axis out of range");
  Polynomial out(dim_);
  for (const auto& [m, c] : terms_) {
    if (m[axis] == 0) continue;
    Exponents dm = m;
    dm[axis] -= 1;
    out.add_term(dm, c * Rational(m[axis]));
  }
  return out;
}

Rational Polynomial::operator()(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("Polynomial: evaluation point has wrong dimension");
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int a = 0; a < dim_; ++a)
      for (int e = 0; e < m[a]; ++e) term *= point[a];
    total += term;
  }
  return total;
}

Rational monomial_integral(int dim, const Exponents& m) {
  require_dim(dim);
  require_valid_exponents(dim, m);
  Rational num(1);
  for (int a = 0; a < dim; ++a) num *= Rational::factorial(static_cast<unsigned>(m[a]));
  return num / Rational::factorial(static_cast<unsigned>(total_degree(m) + dim));
}

Rational integrate(const Polynomial& p) {
  Rational total(0);
  for (const auto& [m, c] : p.terms()) total += c * monomial_integral(p.dim(), m);
  return total;
}

Rational integrate_product(const Polynomial& p, const Polynomial& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("Polynomial: dimension mismatch");
  Rational total(0);
  for (const auto& [mp, cp] : p.terms())
    for (const auto& [mq, cq] : q.terms()) {
      Exponents m = {mp[0] + mq[0], mp[1] + mq[1], mp[2] + mq[2]};
      total += cp * cq * monomial_integral(p.dim(), m);
    }
  return total;
}

} // namespace vform
