#include "vform/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace vform {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (mpz_sgn(v.get_den().get_mpz_t()) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

double Rational::to_double() const {
  // mpq_get_d truncates toward zero; nudge to the true nearest double by
  // comparing against both neighbours in exact arithmetic.
  double d = v_.get_d();
  if (!std::isfinite(d)) return d;
  double best = d;
  mpq_class best_err = ::abs(v_ - mpq_class(d));
  const double inf = std::numeric_limits<double>::infinity();
  for (double cand : {std::nextafter(d, -inf), std::nextafter(d, inf)}) {
    if (!std::isfinite(cand)) continue;
    mpq_class err = ::abs(v_ - mpq_class(cand));
    if (err < best_err) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace vform
