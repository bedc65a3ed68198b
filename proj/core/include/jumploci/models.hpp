#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/group_side.hpp"
#include "jumploci/lie.hpp"

namespace jumploci {

// Central hyperplane arrangement given by hyperplane normals.
struct Arrangement {
  int ambient_dim = 0;
  std::vector<std::vector<Rational>> normals;
  std::vector<std::string> labels;
  std::string metadata;  // records preprocessing such as coning
};

Arrangement make_arrangement(int ambient_dim, std::vector<std::vector<Rational>> normals,
                             std::vector<std::string> labels = {});

// Homogenize an affine arrangement {a.x = c} by a last coordinate and append
// the hyperplane at infinity.
Arrangement cone_arrangement(int ambient_dim, std::vector<std::vector<Rational>> normals,
                             std::vector<Rational> offsets,
                             std::vector<std::string> labels = {});

int arrangement_rank(const Arrangement& arr);

// Minimal dependent subsets of hyperplanes, ascending by size then
// lexicographically; indices 0-based.
std::vector<std::vector<int>> circuits(const Arrangement& arr);

// Orlik-Solomon algebra on the no-broken-circuit basis, zero differential,
// weight equal to degree.  Stored through degree min(q+1, rank);
// q < 0 keeps the full algebra.
Cdga os_algebra(const Arrangement& arr, int q = -1);

Arrangement boolean_arrangement(int n);
Arrangement pencil_arrangement();    // three concurrent lines in C^2
Arrangement braid_a3_arrangement();  // x_i = x_j in C^4

// Named small Lie algebras: "solv2", "heis3", "abelian<n>".
LieAlgebra preset_lie(const std::string& name);

LieRep rank_one_rep();          // 1-dim abelian Lie algebra acting as identity on Q
LieRep heis3_standard_rep();    // strictly upper triangular 3 x 3 matrices

// Graded ring given by tables; the result has zero differential and
// weight = degree, and is validated before being returned.
struct RingTables {
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  // products of global basis indices i <= j, coefficients in degree sum
  std::vector<std::tuple<int, int, std::vector<Scalar>>> products;
};

Cdga ring_cdga(const RingTables& tables);

// Check a bigrading (p, l) per basis element: p, l >= 0 and p + l = degree,
// multiplication adds bidegrees, d shifts (p, l) -> (p+2, l-1), and the
// induced weights p + 2l are >= 1 in degree 1.
struct BigradedReport {
  std::vector<Violation> violations;
  std::vector<std::vector<int>> induced_weights;  // p + 2l per element
};

BigradedReport bigraded_weight_check(const Cdga& a,
                                     const std::vector<std::vector<std::pair<int, int>>>& bidegrees);

// Shared fixtures used across the modules and the test suites.
Cdga fixture_cdga(const std::string& name);          // torus2 | pencil3 | solv2 | heis3
Presentation fixture_presentation(const std::string& name);  // z2 | pencil3 | free2

}  // namespace jumploci
