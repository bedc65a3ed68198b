#include "jumploci/scalar.hpp"

#include <algorithm>
#include <sstream>

namespace jumploci {

Rational rational(long num, long den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  std::string trimmed;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
  if (trimmed.empty()) throw ParseError("empty rational literal");
  try {
    Rational q(trimmed);
    if (q.get_den() == 0) throw ParseError("zero denominator in rational literal", s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero Gaussian rational");
  Rational n = norm();
  return {re / n, -im / n};
}

std::string GaussianRational::str() const {
  if (im == 0) return rational_str(re);
  std::string imag = rational_str(im) + "i";
  if (re == 0) return imag;
  return rational_str(re) + (im > 0 ? "+" : "") + imag;
}

Polynomial::Polynomial(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::t() { return Polynomial(std::vector<Rational>{Rational(0), Rational(1)}); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[k];
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw PreconditionError("leading coefficient of zero polynomial");
  return c_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const Rational lc = r.c_.back();
  for (auto& c : r.c_) c /= lc;
  return r;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quot;
  const int db = b.degree();
  int dr = static_cast<int>(rem.size()) - 1;
  if (dr >= db) quot.assign(dr - db + 1, Rational(0));
  while (dr >= db) {
    Rational f = rem[dr] / b.c_.back();
    quot[dr - db] = f;
    for (int i = 0; i <= db; ++i) rem[dr - db + i] -= f * b.c_[i];
    rem.pop_back();
    dr = static_cast<int>(rem.size()) - 1;
    while (dr >= 0 && rem[dr] == 0) {
      rem.pop_back();
      --dr;
    }
  }
  q = Polynomial(std::move(quot));
  r = Polynomial(std::move(rem));
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    if (!first) out << (c > 0 ? "+" : "");
    if (k == 0) {
      out << rational_str(c);
    } else {
      if (c == -1)
        out << "-";
      else if (c != 1)
        out << rational_str(c) << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
    first = false;
  }
  return out.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial q, r;
    Polynomial::divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

RationalFunction::RationalFunction(Polynomial n, Polynomial d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  if (num.is_zero()) {
    den = Polynomial(Rational(1));
    return;
  }
  Polynomial g = gcd(num, den);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divmod(num, g, q, r);
    num = q;
    Polynomial::divmod(den, g, q, r);
    den = q;
  }
  const Rational lc = den.leading();
  if (lc != 1) {
    std::vector<Rational> nc = num.coeffs(), dc = den.coeffs();
    for (auto& c : nc) c /= lc;
    for (auto& c : dc) c /= lc;
    num = Polynomial(std::move(nc));
    den = Polynomial(std::move(dc));
  }
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero rational function");
  return RationalFunction(den, num);
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den.eval(x);
  if (d == 0) throw PreconditionError("pole of rational function at t = " + rational_str(x));
  return num.eval(x) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num * b.den + b.num * a.den, a.den * b.den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num * b.den - b.num * a.den, a.den * b.den);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num * b.num, a.den * b.den);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw PreconditionError("division by zero rational function");
  return RationalFunction(a.num * b.den, a.den * b.num);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num = -r.num;
  return r;
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}

std::string kind_name(ScalarKind k) {
  switch (k) {
    case ScalarKind::kRational: return "rational";
    case ScalarKind::kGaussian: return "gaussian";
    case ScalarKind::kRatFunc: return "rat_func";
  }
  return "?";
}

ScalarKind join_kind(ScalarKind a, ScalarKind b) {
  if (a == b) return a;
  if (a == ScalarKind::kRational) return b;
  if (b == ScalarKind::kRational) return a;
  throw VariantMismatchError("cannot mix " + kind_name(a) + " and " + kind_name(b) + " scalars");
}

bool Scalar::is_zero() const {
  switch (kind()) {
    case ScalarKind::kRational: return std::get<Rational>(v_) == 0;
    case ScalarKind::kGaussian: return std::get<GaussianRational>(v_).is_zero();
    case ScalarKind::kRatFunc: return std::get<RationalFunction>(v_).is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (kind()) {
    case ScalarKind::kRational: return std::get<Rational>(v_) == 1;
    case ScalarKind::kGaussian: {
      const auto& g = std::get<GaussianRational>(v_);
      return g.re == 1 && g.im == 0;
    }
    case ScalarKind::kRatFunc: {
      const auto& f = std::get<RationalFunction>(v_);
      return f.is_polynomial() && f.num.degree() == 0 && f.num.coeff(0) == 1;
    }
  }
  return false;
}

const Rational& Scalar::as_rational() const {
  if (kind() != ScalarKind::kRational) throw VariantMismatchError("scalar is not rational");
  return std::get<Rational>(v_);
}

const GaussianRational& Scalar::as_gaussian() const {
  if (kind() != ScalarKind::kGaussian) throw VariantMismatchError("scalar is not Gaussian");
  return std::get<GaussianRational>(v_);
}

const RationalFunction& Scalar::as_rat_func() const {
  if (kind() != ScalarKind::kRatFunc) throw VariantMismatchError("scalar is not a rational function");
  return std::get<RationalFunction>(v_);
}

GaussianRational Scalar::to_gaussian() const {
  if (kind() == ScalarKind::kGaussian) return std::get<GaussianRational>(v_);
  if (kind() == ScalarKind::kRational) return {std::get<Rational>(v_), Rational(0)};
  throw VariantMismatchError("cannot view rational function as Gaussian rational");
}

RationalFunction Scalar::to_rat_func() const {
  if (kind() == ScalarKind::kRatFunc) return std::get<RationalFunction>(v_);
  if (kind() == ScalarKind::kRational) return RationalFunction(std::get<Rational>(v_));
  throw VariantMismatchError("cannot view Gaussian rational as rational function");
}

Scalar Scalar::promoted(ScalarKind k) const {
  if (k == kind()) return *this;
  switch (k) {
    case ScalarKind::kRational: throw VariantMismatchError("cannot demote scalar to rational");
    case ScalarKind::kGaussian: return Scalar(to_gaussian());
    case ScalarKind::kRatFunc: return Scalar(to_rat_func());
  }
  throw InternalError("bad scalar kind");
}

namespace {

template <typename F>
Scalar binary_op(const Scalar& a, const Scalar& b, F f) {
  ScalarKind k = join_kind(a.kind(), b.kind());
  switch (k) {
    case ScalarKind::kRational: return f(a.as_rational(), b.as_rational());
    case ScalarKind::kGaussian: return f(a.to_gaussian(), b.to_gaussian());
    case ScalarKind::kRatFunc: return f(a.to_rat_func(), b.to_rat_func());
  }
  throw InternalError("bad scalar kind");
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
  return binary_op(a, b, [](const auto& x, const auto& y) { return Scalar(x + y); });
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  return binary_op(a, b, [](const auto& x, const auto& y) { return Scalar(x - y); });
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  return binary_op(a, b, [](const auto& x, const auto& y) { return Scalar(x * y); });
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw PreconditionError("scalar division by zero");
  return binary_op(a, b, [](const auto& x, const auto& y) { return Scalar(x / y); });
}

Scalar Scalar::operator-() const {
  switch (kind()) {
    case ScalarKind::kRational: return Scalar(Rational(-std::get<Rational>(v_)));
    case ScalarKind::kGaussian: return Scalar(-std::get<GaussianRational>(v_));
    case ScalarKind::kRatFunc: return Scalar(-std::get<RationalFunction>(v_));
  }
  throw InternalError("bad scalar kind");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero scalar");
  switch (kind()) {
    case ScalarKind::kRational: return Scalar(Rational(1 / std::get<Rational>(v_)));
    case ScalarKind::kGaussian: return Scalar(std::get<GaussianRational>(v_).inverse());
    case ScalarKind::kRatFunc: return Scalar(std::get<RationalFunction>(v_).inverse());
  }
  throw InternalError("bad scalar kind");
}

bool operator==(const Scalar& a, const Scalar& b) {
  ScalarKind k;
  try {
    k = join_kind(a.kind(), b.kind());
  } catch (const VariantMismatchError&) {
    return false;
  }
  switch (k) {
    case ScalarKind::kRational: return a.as_rational() == b.as_rational();
    case ScalarKind::kGaussian: return a.to_gaussian() == b.to_gaussian();
    case ScalarKind::kRatFunc: return a.to_rat_func() == b.to_rat_func();
  }
  return false;
}

std::string Scalar::str() const {
  switch (kind()) {
    case ScalarKind::kRational: return rational_str(std::get<Rational>(v_));
    case ScalarKind::kGaussian: return std::get<GaussianRational>(v_).str();
    case ScalarKind::kRatFunc: return std::get<RationalFunction>(v_).str();
  }
  return "?";
}

long bit_size(const Rational& q) {
  return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2) +
                           mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

long bit_size(const Scalar& s) {
  switch (s.kind()) {
    case ScalarKind::kRational: return bit_size(s.as_rational());
    case ScalarKind::kGaussian: {
      const auto& g = s.as_gaussian();
      return bit_size(g.re) + bit_size(g.im);
    }
    case ScalarKind::kRatFunc: {
      const auto& f = s.as_rat_func();
      long total = 0;
      for (const auto& c : f.num.coeffs()) total += bit_size(c);
      for (const auto& c : f.den.coeffs()) total += bit_size(c);
      return total + f.num.degree() + f.den.degree();
    }
  }
  return 0;
}

}  // namespace jumploci
