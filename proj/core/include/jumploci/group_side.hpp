#pragma once

#include <complex>
#include <string>
#include <vector>

#include "jumploci/cdga.hpp"
#include "jumploci/lie.hpp"

namespace jumploci {

// Finitely presented group.  Words are lists of nonzero signed 1-based
// generator indices, stored freely reduced.
struct Presentation {
  int generators = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> relators;
};

std::vector<int> free_reduce(std::vector<int> word);
Presentation make_presentation(int generators, std::vector<std::vector<int>> relators,
                               std::vector<std::string> labels = {});

// Exact finite-dimensional representation of the free group on the
// generators; relator images must be the identity to present the group.
struct GroupRep {
  int dimV = 0;
  std::vector<SparseMatrix> images;  // one invertible dimV x dimV matrix per generator
};

std::vector<Violation> validate_group_rep(const Presentation& p, const GroupRep& rep);

SparseMatrix rep_word(const GroupRep& rep, const std::vector<int>& word);

// Fox derivative of a word with respect to each generator, evaluated
// through the representation: d(x_j) = 1, d(x_j^{-1}) = -rho(x_j)^{-1},
// d(uv) = d(u) + rho(u) d(v).
std::vector<SparseMatrix> fox_derivatives(const GroupRep& rep, const std::vector<int>& word);

// Equivariant cochain maps of the presentation 2-complex:
// delta0 stacks rho(x_i) - 1, delta1 stacks the Fox blocks of the relators.
struct PresentationCochain {
  SparseMatrix delta0;  // (g dimV) x dimV
  SparseMatrix delta1;  // (m dimV) x (g dimV)
};

PresentationCochain presentation_cochain_matrices(const Presentation& p, const GroupRep& rep);

// Twisted Betti numbers b_0 and b_1 of the presentation 2-complex.
std::vector<int> twisted_betti_low(const Presentation& p, const GroupRep& rep);

// Characteristic-variety membership dim H^i >= r for i <= 1.
bool cv_membership(const Presentation& p, const GroupRep& rep, int i, int r);

// Floating-point surface used only to compare against exponentials of
// rational classes; everything else in the library stays exact.
struct NumericTolerances {
  double rank_threshold = 1e-9;
  double guard_low = 1e-12;
  double guard_high = 1e-6;
};

struct NumericBetti {
  int b0 = 0, b1 = 0;
  bool indeterminate = false;  // some singular value fell into the guard band
};

// Rank-one characters: one nonzero complex value per generator.
NumericBetti numeric_betti_rank_one(const Presentation& p,
                                    const std::vector<std::complex<double>>& character,
                                    const NumericTolerances& tol);

struct ExpComparePoint {
  Rational t;
  int beta = 0;            // exact, from the algebra side
  int b = 0;               // numeric, from the group side
  bool indeterminate = false;
  bool germ_sample = false;
  bool inequality_ok = false;  // beta <= b (vacuous when indeterminate)
  bool germ_equal = false;
};

struct ExpCompareSample {
  std::vector<Rational> omega;
  std::vector<ExpComparePoint> points;
};

struct ExpCompareReport {
  int degree = 1;
  NumericTolerances tolerances;
  std::vector<ExpCompareSample> samples;
  int violations = 0;       // samples with beta > b
  int indeterminate = 0;    // guard-band hits
  int germ_mismatches = 0;  // germ samples with beta != b
};

// Compare exact Aomoto Betti numbers of (a, t omega) against numeric twisted
// Betti numbers of p at the exponential character exp(t . dict omega).
// `dict` maps degree-1 coordinates of a to generator exponents of p.
ExpCompareReport exp_compare(const Cdga& a, const Presentation& p, const SparseMatrix& dict,
                             const std::vector<std::vector<Rational>>& omega_samples,
                             const std::vector<Rational>& t_samples,
                             const std::vector<Rational>& germ_samples, int degree,
                             const NumericTolerances& tol);

}  // namespace jumploci
