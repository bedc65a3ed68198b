#pragma once

#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/lie.hpp"
#include "jumploci/multipoly.hpp"

namespace jumploci {

// Everything on A (x) V uses A-basis-major, V-minor ordering:
// (a_m (x) v_p) has global index m * dimV + p within its degree.

// Residual d omega + 1/2 [omega, omega], one degree-2 element of A per Lie
// basis vector.
std::vector<GradedElement> mc_residual(const Cdga& a, const LieAlgebra& e,
                                       const FlatConnection& omega);

bool is_flat(const Cdga& a, const LieAlgebra& e, const FlatConnection& omega);

// Twisted complex (A (x) V, d_omega).  matrices[i] is
// D_i : A^i (x) V -> A^{i+1} (x) V; D_{i+1} D_i = 0 exactly when omega is flat.
struct AomotoComplex {
  int dimV = 0;
  std::vector<SparseMatrix> matrices;
};

// D_i(x (x) v) = dx (x) v + sum_alpha (omega_alpha x) (x) theta_alpha v,
// built for i = 0..q.  omega need not be flat; entries follow omega's scalar
// variant, so a rational-function omega gives matrices over Q(t).
AomotoComplex aomoto_matrices(const Cdga& a, const LieRep& r, const FlatConnection& omega, int q);

// beta_i = dim ker D_i - rank D_{i-1} for i = 0..q.  Requires flat omega and
// degrees through q+1.
std::vector<int> aomoto_betti(const Cdga& a, const LieRep& r, const FlatConnection& omega, int q);

// Coordinates z on A^1 (x) b, ordered A-major: variable m * dim(b) + alpha
// is named after the degree-1 label (plus the Lie label unless b is a line).
std::vector<std::string> connection_variable_names(const Cdga& a, const LieAlgebra& e);

// Quadratic equations in the z-variables cutting out the flat locus:
// one polynomial per basis element of A^2 (x) b, A-major order.
std::vector<MultiPoly> mc_equations(const Cdga& a, const LieAlgebra& e);

// The same family of twisted differentials with the connection left symbolic;
// entries are affine-linear polynomials in the z-variables.
struct UniversalAomoto {
  int dimV = 0;
  int nvars = 0;
  std::vector<std::string> var_names;
  std::vector<std::vector<std::vector<MultiPoly>>> matrices;  // [degree][row][col]
  std::vector<std::pair<int, int>> shapes;  // explicit, for empty degrees
};

UniversalAomoto universal_aomoto_matrices(const Cdga& a, const LieRep& r, int q);

// Evaluate the symbolic matrices at a rational point.
AomotoComplex specialize(const UniversalAomoto& u, const std::vector<Rational>& z);

// Determinantal description of {flat omega : beta_i >= depth}.  A point
// belongs iff every mc polynomial vanishes and all generators of at least
// one piece vanish.  Pieces follow the rank splits
// rank D_{i-1} <= a, rank D_i <= b with a + b = n_i - depth; minor families
// whose size exceeds the matrix are vacuous and contribute no generators.
struct JumpLocusPiece {
  int rank_bound_below = 0;  // allowed rank of D_{i-1}
  int rank_bound_above = 0;  // allowed rank of D_i
  std::vector<MultiPoly> generators;  // normalized, sorted, deduplicated
};

struct JumpLocusDescription {
  int degree = 0;
  int depth = 0;
  bool empty = false;  // depth exceeds n_i: no point qualifies
  int nvars = 0;
  std::vector<std::string> var_names;
  std::vector<MultiPoly> mc;  // appended to every piece
  std::vector<JumpLocusPiece> pieces;  // absent at depth <= 0: flat locus itself
};

JumpLocusDescription jump_locus_generators(const Cdga& a, const LieRep& r, int i, int depth);

bool jump_locus_satisfied(const JumpLocusDescription& d, const std::vector<Rational>& z);

}  // namespace jumploci
