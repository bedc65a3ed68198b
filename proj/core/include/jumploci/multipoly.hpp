#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

// Sparse multivariate polynomial over Q in a fixed number of variables.
// Terms are kept in a map keyed by exponent vector (lexicographic order),
// with no zero coefficients, so the representation is canonical.
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, Rational c);
  static MultiPoly variable(int nvars, int index);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rational& c);

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;
  MultiPoly scaled(const Rational& c) const;
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rational eval(const std::vector<Rational>& point) const;

  // Substitute each variable by a polynomial in a (possibly different)
  // variable set.  `images.size()` must equal nvars().
  MultiPoly substitute(const std::vector<MultiPoly>& images, int new_nvars) const;

  MultiPoly derivative(int var) const;

  // Divide by the coefficient of the lexicographically largest term.
  MultiPoly normalized() const;

  // Total order compatible with the canonical representation.
  static bool less(const MultiPoly& a, const MultiPoly& b);

  std::string str(const std::vector<std::string>& var_names) const;

 private:
  int nvars_;
  std::map<Exponents, Rational> terms_;
};

// Determinant of a square matrix of polynomials (Laplace expansion).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m, int nvars);

}  // namespace jumploci
