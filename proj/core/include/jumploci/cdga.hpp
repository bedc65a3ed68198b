#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jumploci/sparse_matrix.hpp"

namespace jumploci {

// Homogeneous basis of a graded vector space, degrees 0..top.
struct GradedBasis {
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;  // same shape as dims

  GradedBasis() = default;
  explicit GradedBasis(std::vector<int> d, std::vector<std::vector<std::string>> l = {});

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
  int dim(int deg) const {
    return (deg < 0 || deg > top_degree()) ? 0 : dims[deg];
  }
  int total() const;
  int offset(int deg) const;  // global index of first element of the degree
};

// One homogeneous element, dense coordinates in its degree.
struct GradedElement {
  int degree = 0;
  std::vector<Scalar> c;

  bool is_zero() const {
    for (const auto& v : c)
      if (!v.is_zero()) return false;
    return true;
  }
};

GradedElement operator+(const GradedElement& a, const GradedElement& b);
GradedElement operator-(const GradedElement& a, const GradedElement& b);
GradedElement scaled(const GradedElement& a, const Scalar& f);

// Finite-dimensional graded-commutative differential graded algebra,
// represented through its top stored degree.  `zero_above` records whether
// every degree above the top is zero or simply not computed.
//
// The multiplication table is stored for global-index pairs i <= j only;
// the opposite order is derived through the Koszul sign.  Explicitly
// asserted redundant products (j < i) are kept verbatim so validation can
// compare them against the derived value.
class Cdga {
 public:
  Cdga() : zero_above_(true) {}
  Cdga(GradedBasis basis, bool zero_above);

  void set_diff(int deg, SparseMatrix m);
  void set_product(int deg_a, int ia, int deg_b, int ib, std::vector<Scalar> target);
  void set_product_asserted(int deg_a, int ia, int deg_b, int ib, std::vector<Scalar> target);
  void set_weights(std::vector<std::vector<int>> w);
  void clear_weights() { weights_.reset(); }

  const GradedBasis& basis() const { return basis_; }
  bool zero_above() const { return zero_above_; }
  int top_degree() const { return basis_.top_degree(); }
  bool degree_known(int deg) const { return deg <= top_degree() || zero_above_; }
  int dim(int deg) const;

  const std::string& label(int deg, int k) const;

  // d_deg : A^deg -> A^{deg+1} as a dim(deg+1) x dim(deg) matrix.
  SparseMatrix diff(int deg) const;

  // Coefficients of (basis element) * (basis element) in degree a+b.
  std::vector<Scalar> product(int deg_a, int ia, int deg_b, int ib) const;
  GradedElement multiply(const GradedElement& x, const GradedElement& y) const;
  GradedElement d(const GradedElement& x) const;
  GradedElement basis_element(int deg, int k) const;

  bool has_weights() const { return weights_.has_value(); }
  const std::vector<std::vector<int>>& weights() const;
  int weight(int deg, int k) const;

  const std::map<std::pair<int, int>, std::vector<Scalar>>& stored_products() const {
    return products_;
  }
  const std::map<std::pair<int, int>, std::vector<Scalar>>& asserted_products() const {
    return asserted_;
  }

 private:
  GradedBasis basis_;
  bool zero_above_;
  std::vector<SparseMatrix> diffs_;  // index = source degree
  std::map<std::pair<int, int>, std::vector<Scalar>> products_;  // global (i, j), i <= j
  std::map<std::pair<int, int>, std::vector<Scalar>> asserted_;  // verbatim, j < i
  std::optional<std::vector<std::vector<int>>> weights_;

  int global(int deg, int k) const;
  std::pair<int, int> locate(int gi) const;
};

struct Violation {
  std::string check;
  std::string witness;
};

// Axiom check: connectedness, unit, graded commutativity (including asserted
// redundant products), associativity, d^2 = 0, Leibniz, weight compatibility.
// Each violation names the failed axiom and the witness basis elements.
std::vector<Violation> validate_cdga(const Cdga& a);

struct WeightReport {
  std::vector<Violation> violations;
  bool positive = false;  // all degree-1 weights >= 1
};

WeightReport validate_weights(const Cdga& a);

// Betti numbers b_0..b_q of (A, d).  Degree q+1 must be stored or declared
// zero, otherwise the input is incomplete.
std::vector<int> cohomology_dims(const Cdga& a, int q);

// Weight action t.a = t^w a on a homogeneous element.  t = 0 is allowed
// only when the weight data is positive; negative weights at t = 0 are poles.
GradedElement apply_weight_action(const Cdga& a, const Rational& t, const GradedElement& x);

}  // namespace jumploci
