#pragma once

#include <map>
#include <string>
#include <vector>

#include "jumploci/cdga.hpp"

namespace jumploci {

// Finite-dimensional Lie algebra through structure constants.
// Brackets are stored for index pairs a < b only; antisymmetry is structural.
struct LieAlgebra {
  int dim = 0;
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, std::vector<Scalar>> brackets;

  LieAlgebra() = default;
  LieAlgebra(int d, std::vector<std::string> l) : dim(d), labels(std::move(l)) {
    if (static_cast<int>(labels.size()) != dim)
      throw PreconditionError("lie label count mismatch");
  }

  void set_bracket(int a, int b, std::vector<Scalar> coeffs);
  std::vector<Scalar> bracket(int a, int b) const;
  std::vector<Scalar> bracket_elements(const std::vector<Scalar>& x,
                                       const std::vector<Scalar>& y) const;
};

// Finite-dimensional representation theta: lie -> gl(V).
struct LieRep {
  LieAlgebra lie;
  int dimV = 0;
  std::vector<SparseMatrix> theta;  // one dimV x dimV matrix per basis element
};

std::vector<Violation> validate_lie(const LieAlgebra& e);
std::vector<Violation> validate_rep(const LieRep& rep);

// Chevalley-Eilenberg cochain algebra: the exterior algebra on the duals with
// d e_g* = - sum_{a<b} c^g_{ab} e_a* e_b* extended as a derivation.
Cdga lie_cochain_cdga(const LieAlgebra& e);

// Element of A^1 (x) b given by its coefficient matrix: rows follow the
// degree-1 basis of A, columns the basis of b.
struct FlatConnection {
  SparseMatrix coeffs;
};

struct FlatnessFailure {
  int generator;          // Lie basis index whose dual breaks d-commutation
  GradedElement mismatch;  // the degree-2 defect
};

struct ConnectionCheck {
  bool flat;
  FlatConnection omega;
  std::vector<FlatnessFailure> failures;
};

// Defects (d f - f d)(e_g*) of the degree-1 assignment f(e_g*) = omega_g.
std::vector<FlatnessFailure> degree_one_commutation_failures(const Cdga& a, const LieAlgebra& e,
                                                             const SparseMatrix& coeffs);

// A degree-1 generator assignment determines a connection; it is flat exactly
// when the assignment extends to a map of differential graded algebras.
ConnectionCheck connection_of_hom(const Cdga& a, const LieAlgebra& e,
                                  const SparseMatrix& assignment);

// Inverse direction; requires a flat connection.
SparseMatrix hom_of_connection(const Cdga& a, const LieAlgebra& e, const FlatConnection& omega);

}  // namespace jumploci
