#include "harary/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>

#include "harary/error.hpp"

namespace harary {

mpq_class Rational::make_int(long long n) {
  // mpq_class has no long long constructor on LP64-ambivalent platforms;
  // route through mpz string conversion only when it would not fit a long.
  if (n >= static_cast<long long>(std::numeric_limits<long>::min()) &&
      n <= static_cast<long long>(std::numeric_limits<long>::max())) {
    return mpq_class(static_cast<long>(n));
  }
  return mpq_class(mpz_class(std::to_string(n)));
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw OutOfRange("rational with zero denominator");
  v_ = make_int(num) / make_int(den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw OutOfRange("division by zero rational");
  v_ /= o.v_;
  return *this;
}

namespace {

std::string fmt_sig(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace

std::string Rational::approx() const {
  const double x = to_double();
  const std::string target = fmt_sig(x, 15);
  for (int digits = 1; digits < 15; ++digits) {
    std::string s = fmt_sig(x, digits);
    if (fmt_sig(std::strtod(s.c_str(), nullptr), 15) == target) return s;
  }
  return target;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace harary
