#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace harary {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.  All index values and closed forms are carried as Rational;
/// no comparison in the library ever goes through floating point.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long long num) : v_(make_int(num)) {}
  Rational(int num) : v_(static_cast<long>(num)) {}
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  /// Lowest-terms string, "p/q"; the "/q" part is omitted when q == 1.
  std::string str() const { return v_.get_str(); }

  /// Shortest decimal string that agrees with the exact value to 15
  /// significant digits when parsed back.  Display only, never compared.
  std::string approx() const;

  double to_double() const { return v_.get_d(); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

 private:
  static mpq_class make_int(long long n);
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace harary
