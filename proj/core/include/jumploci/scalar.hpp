#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "jumploci/errors.hpp"

namespace jumploci {

// Exact rational number in lowest terms with positive denominator.
using Rational = mpq_class;

Rational rational(long num, long den = 1);
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// Gaussian rational re + im*i.
struct GaussianRational {
  Rational re, im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re == 0 && im == 0; }
  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational inverse() const;
  friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
    return a * b.inverse();
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  std::string str() const;
};

// Univariate polynomial over Q in the parameter t.
// Coefficients ascending by power, no trailing zero coefficient.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Rational c);
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial t();

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  const Rational& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  Polynomial monic() const;

  Rational eval(const Rational& x) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Division with remainder; divisor must be nonzero.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic, gcd(0,0) = 0

// Quotient of polynomials, kept with coprime numerator and denominator
// and monic denominator.  The denominator is never zero.
struct RationalFunction {
  Polynomial num, den;

  RationalFunction() : num(), den(Rational(1)) {}
  RationalFunction(Polynomial n, Polynomial d);
  explicit RationalFunction(Rational c) : num(std::move(c)), den(Rational(1)) {}
  static RationalFunction t() { return RationalFunction(Polynomial::t(), Polynomial(Rational(1))); }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.degree() == 0; }
  RationalFunction inverse() const;
  Rational eval(const Rational& x) const;  // pole -> PreconditionError

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num == b.num && a.den == b.den;
  }
  std::string str() const;
};

enum class ScalarKind { kRational = 0, kGaussian = 1, kRatFunc = 2 };

std::string kind_name(ScalarKind k);

// Join of two scalar variants.  Rational embeds into either extension;
// Gaussian and rational-function scalars have no common field here.
ScalarKind join_kind(ScalarKind a, ScalarKind b);

// One exact scalar: a rational, a Gaussian rational, or a rational function.
// Mixed-variant arithmetic promotes rationals into the wider variant and
// rejects Gaussian/rational-function combinations.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational q) : v_(std::move(q)) {}
  Scalar(long n) : v_(Rational(n)) {}
  Scalar(int n) : v_(Rational(n)) {}
  Scalar(GaussianRational g) : v_(std::move(g)) {}
  Scalar(RationalFunction f) : v_(std::move(f)) {}

  ScalarKind kind() const { return static_cast<ScalarKind>(v_.index()); }
  bool is_zero() const;
  bool is_one() const;

  const Rational& as_rational() const;
  const GaussianRational& as_gaussian() const;
  const RationalFunction& as_rat_func() const;

  GaussianRational to_gaussian() const;    // rational or gaussian only
  RationalFunction to_rat_func() const;    // rational or rat_func only
  Scalar promoted(ScalarKind k) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  Scalar inverse() const;
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::string str() const;

 private:
  std::variant<Rational, GaussianRational, RationalFunction> v_;
};

// Size heuristic used for pivot selection: total bits of the integers involved.
long bit_size(const Rational& q);
long bit_size(const Scalar& s);

}  // namespace jumploci
