#pragma once

#include <string>
#include <vector>

#include "jumploci/aomoto.hpp"

namespace jumploci {

// Linear subspace of Q^n through the origin, stored by its defining
// equations in reduced echelon form, so equal subspaces compare equal.
struct LinearSubspaceQ {
  int ambient_dim = 0;
  SparseMatrix equations;  // rows are the defining linear forms

  static LinearSubspaceQ whole(int ambient_dim);
  static LinearSubspaceQ from_equations(int ambient_dim, const SparseMatrix& eqs);
  static LinearSubspaceQ from_span(int ambient_dim,
                                   const std::vector<std::vector<Rational>>& span);

  int codim() const { return equations.rows(); }
  int dim() const { return ambient_dim - equations.rows(); }
  bool contains(const std::vector<Rational>& z) const;
  bool subspace_of(const LinearSubspaceQ& other) const;
  std::vector<std::vector<Rational>> span() const;

  friend bool operator==(const LinearSubspaceQ& a, const LinearSubspaceQ& b) {
    return a.ambient_dim == b.ambient_dim && a.equations == b.equations;
  }
  friend bool operator!=(const LinearSubspaceQ& a, const LinearSubspaceQ& b) { return !(a == b); }
};

// beta_i(omega) >= depth; omega must be flat.
bool resonance_membership(const Cdga& a, const LieRep& r, const FlatConnection& omega, int i,
                          int depth);

enum class ScanMode { kPlainScaling, kWeightAction };

struct LineScanPoint {
  Rational t;
  bool flat = false;
  int beta = -1;  // valid only when flat
};

// beta_i along t -> t.omega; non-flat samples are reported, not fatal.
std::vector<LineScanPoint> line_scan(const Cdga& a, const LieRep& r, const FlatConnection& omega,
                                     const std::vector<Rational>& samples, int i, ScanMode mode);

// beta_i at the generic point of the line t.omega, computed over Q(t).
// Requires d omega = 0 and [omega, omega] = 0 so the whole line is flat.
int generic_betti(const Cdga& a, const LieRep& r, const FlatConnection& omega, int i);

// Certified search for maximal linear subspaces inside the rank-one locus
// {beta_i >= depth} of a positive-weight algebra with d = 0 in degree 1.
struct ComponentReport {
  std::vector<LinearSubspaceQ> components;
  std::vector<bool> weighted_homogeneous;  // parallel to components
  bool complete = true;                    // false when the budget ran out
  long evaluations = 0;
};

ComponentReport linear_components_rank_one(const Cdga& a, int i, int depth, long search_budget);

// Laurent polynomial sum c_u t^u over a finite support in Z^n.
struct LaurentPoly {
  int nvars = 0;
  std::vector<std::vector<long>> support;
  std::vector<Rational> coeffs;  // parallel to support, nonzero
};

// Change of frame M together with positive weights: the one-parameter
// curves are t -> exp(M D(t) M^{-1} z) with D(t) = diag(t^{w_j}).
struct WeightFrame {
  SparseMatrix M;
  std::vector<int> weights;
};

WeightFrame identity_frame(int n, std::vector<int> weights = {});

// Directions z whose whole exponential curve stays inside {f = 0}:
// a finite union of rational linear subspaces, returned as the maximal
// elements sorted by (codimension, equations).  Requires f(1) = 0.
std::vector<LinearSubspaceQ> wetc(const LaurentPoly& f, const WeightFrame& frame);

// Degeneration check for the spectral sequence of a zero-differential
// algebra along a degree-1 direction nu.
struct FnReport {
  std::vector<int> e2;       // beta_i(h, nu)
  std::vector<int> generic;  // generic beta_i along nu
  bool degenerate = false;
};

FnReport fn_degeneration(const Cdga& h, const std::vector<Rational>& nu, int q);

}  // namespace jumploci
