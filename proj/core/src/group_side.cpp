#include "jumploci/group_side.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "jumploci/aomoto.hpp"

namespace jumploci {

std::vector<int> free_reduce(std::vector<int> word) {
  std::vector<int> out;
  for (int letter : word) {
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Presentation make_presentation(int generators, std::vector<std::vector<int>> relators,
                               std::vector<std::string> labels) {
  if (generators < 0) throw PreconditionError("generator count must be nonnegative");
  Presentation p;
  p.generators = generators;
  if (labels.empty())
    for (int i = 0; i < generators; ++i) labels.push_back("x" + std::to_string(i + 1));
  if (static_cast<int>(labels.size()) != generators)
    throw PreconditionError("generator label count mismatch");
  p.labels = std::move(labels);
  for (auto& w : relators) {
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > generators)
        throw PreconditionError("relator letter out of range");
    p.relators.push_back(free_reduce(std::move(w)));
  }
  return p;
}

std::vector<Violation> validate_group_rep(const Presentation& p, const GroupRep& rep) {
  std::vector<Violation> out;
  if (static_cast<int>(rep.images.size()) != p.generators) {
    out.push_back({"shape", "one image matrix per generator required"});
    return out;
  }
  for (int i = 0; i < p.generators; ++i) {
    const auto& m = rep.images[i];
    if (m.rows() != rep.dimV || m.cols() != rep.dimV) {
      out.push_back({"shape", p.labels[i]});
      continue;
    }
    if (!inverse(m)) out.push_back({"invertible", p.labels[i]});
  }
  if (!out.empty()) return out;
  for (size_t k = 0; k < p.relators.size(); ++k)
    if (rep_word(rep, p.relators[k]) != SparseMatrix::identity(rep.dimV))
      out.push_back({"relator-image", "r" + std::to_string(k + 1)});
  return out;
}

SparseMatrix rep_word(const GroupRep& rep, const std::vector<int>& word) {
  SparseMatrix acc = SparseMatrix::identity(rep.dimV);
  std::vector<std::optional<SparseMatrix>> inv_cache(rep.images.size());
  for (int letter : word) {
    const int j = std::abs(letter) - 1;
    if (j < 0 || j >= static_cast<int>(rep.images.size()))
      throw PreconditionError("word letter out of range");
    if (letter > 0) {
      acc = acc * rep.images[j];
    } else {
      if (!inv_cache[j]) {
        auto inv = inverse(rep.images[j]);
        if (!inv) throw PreconditionError("generator image is not invertible");
        inv_cache[j] = std::move(*inv);
      }
      acc = acc * *inv_cache[j];
    }
  }
  return acc;
}

std::vector<SparseMatrix> fox_derivatives(const GroupRep& rep, const std::vector<int>& word) {
  const int g = static_cast<int>(rep.images.size());
  std::vector<SparseMatrix> deriv(g, SparseMatrix(rep.dimV, rep.dimV));
  std::vector<std::optional<SparseMatrix>> inv_cache(g);
  SparseMatrix prefix = SparseMatrix::identity(rep.dimV);
  for (int letter : word) {
    const int j = std::abs(letter) - 1;
    if (j < 0 || j >= g) throw PreconditionError("word letter out of range");
    if (letter > 0) {
      deriv[j] = deriv[j] + prefix;
      prefix = prefix * rep.images[j];
    } else {
      if (!inv_cache[j]) {
        auto inv = inverse(rep.images[j]);
        if (!inv) throw PreconditionError("generator image is not invertible");
        inv_cache[j] = std::move(*inv);
      }
      deriv[j] = deriv[j] - prefix * *inv_cache[j];
      prefix = prefix * *inv_cache[j];
    }
  }
  return deriv;
}

PresentationCochain presentation_cochain_matrices(const Presentation& p, const GroupRep& rep) {
  auto violations = validate_group_rep(p, rep);
  if (!violations.empty()) {
    std::string msg = "invalid representation:";
    for (const auto& v : violations) msg += " [" + v.check + " at " + v.witness + "]";
    throw PreconditionError(msg);
  }
  const int d = rep.dimV;
  PresentationCochain c;
  c.delta0 = SparseMatrix(0, d);
  for (int i = 0; i < p.generators; ++i)
    c.delta0 = vstack(c.delta0, rep.images[i] - SparseMatrix::identity(d));
  c.delta1 = SparseMatrix(0, p.generators * d);
  for (const auto& rel : p.relators) {
    auto fox = fox_derivatives(rep, rel);
    SparseMatrix row(d, 0);
    for (int i = 0; i < p.generators; ++i) row = hstack(row, fox[i]);
    c.delta1 = vstack(c.delta1, row);
  }
  return c;
}

std::vector<int> twisted_betti_low(const Presentation& p, const GroupRep& rep) {
  PresentationCochain c = presentation_cochain_matrices(p, rep);
  const int r0 = rank_exact(c.delta0);
  const int r1 = rank_exact(c.delta1);
  return {rep.dimV - r0, p.generators * rep.dimV - r1 - r0};
}

bool cv_membership(const Presentation& p, const GroupRep& rep, int i, int r) {
  if (i < 0 || i > 1)
    throw PreconditionError(
        "degree above 1 is not computable from a presentation complex");
  if (r <= 0) return true;
  return twisted_betti_low(p, rep)[i] >= r;
}

namespace {

using Complex = std::complex<double>;

// Singular values by one-sided Jacobi (Hestenes): rotate column pairs until
// they are mutually orthogonal, then read off the column norms.  Unlike the
// Gram-matrix route this keeps tiny singular values at roundoff scale instead
// of lifting them to sqrt(machine noise).
std::vector<double> singular_values(std::vector<std::vector<double>> a) {
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  if (rows < cols) {
    std::vector<std::vector<double>> t(cols, std::vector<double>(rows));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t[j][i] = a[i][j];
    a = std::move(t);
    std::swap(rows, cols);
  }
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool converged = true;
    for (int p = 0; p < cols; ++p)
      for (int q = p + 1; q < cols; ++q) {
        double alpha = 0, beta = 0, gamma = 0;
        for (int k = 0; k < rows; ++k) {
          alpha += a[k][p] * a[k][p];
          beta += a[k][q] * a[k][q];
          gamma += a[k][p] * a[k][q];
        }
        if (gamma * gamma <= 1e-30 * alpha * beta) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2 * gamma);
        const double t =
            (zeta >= 0 ? 1.0 : -1.0) / (std::fabs(zeta) + std::sqrt(zeta * zeta + 1));
        const double c = 1.0 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < rows; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
      }
    if (converged) break;
  }
  std::vector<double> sv(cols);
  for (int j = 0; j < cols; ++j) {
    double acc = 0;
    for (int k = 0; k < rows; ++k) acc += a[k][j] * a[k][j];
    sv[j] = std::sqrt(acc);
  }
  return sv;
}

// Rank of a complex matrix through the singular values of its real embedding
// [[Re, -Im], [Im, Re]]; every singular value appears twice there.
int numeric_rank(const std::vector<std::vector<Complex>>& m, const NumericTolerances& tol,
                 bool& indeterminate) {
  const int r = static_cast<int>(m.size());
  const int c = r == 0 ? 0 : static_cast<int>(m[0].size());
  if (r == 0 || c == 0) return 0;
  std::vector<std::vector<double>> a(2 * r, std::vector<double>(2 * c, 0.0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      a[i][j] = m[i][j].real();
      a[i][j + c] = -m[i][j].imag();
      a[i + r][j] = m[i][j].imag();
      a[i + r][j + c] = m[i][j].real();
    }
  int count = 0;
  for (double sigma : singular_values(std::move(a))) {
    if (sigma >= tol.guard_low && sigma <= tol.guard_high) indeterminate = true;
    if (sigma > tol.rank_threshold) ++count;
  }
  return count / 2;
}

}  // namespace

NumericBetti numeric_betti_rank_one(const Presentation& p,
                                    const std::vector<std::complex<double>>& character,
                                    const NumericTolerances& tol) {
  if (static_cast<int>(character.size()) != p.generators)
    throw PreconditionError("one character value per generator required");
  for (const auto& c : character)
    if (std::abs(c) == 0.0) throw PreconditionError("character values must be nonzero");
  const int g = p.generators;
  std::vector<std::vector<Complex>> d0(g, std::vector<Complex>(1));
  for (int i = 0; i < g; ++i) d0[i][0] = character[i] - 1.0;
  std::vector<std::vector<Complex>> d1;
  for (const auto& rel : p.relators) {
    std::vector<Complex> fox(g, 0.0);
    Complex prefix = 1.0;
    for (int letter : rel) {
      const int j = std::abs(letter) - 1;
      if (letter > 0) {
        fox[j] += prefix;
        prefix *= character[j];
      } else {
        prefix /= character[j];
        fox[j] -= prefix;
      }
    }
    d1.push_back(std::move(fox));
  }
  NumericBetti nb;
  const int r0 = numeric_rank(d0, tol, nb.indeterminate);
  const int r1 = numeric_rank(d1, tol, nb.indeterminate);
  nb.b0 = 1 - r0;
  nb.b1 = g - r1 - r0;
  return nb;
}

ExpCompareReport exp_compare(const Cdga& a, const Presentation& p, const SparseMatrix& dict,
                             const std::vector<std::vector<Rational>>& omega_samples,
                             const std::vector<Rational>& t_samples,
                             const std::vector<Rational>& germ_samples, int degree,
                             const NumericTolerances& tol) {
  if (degree < 0 || degree > 1)
    throw PreconditionError(
        "degree above 1 is not computable from a presentation complex");
  if (dict.rows() != p.generators || dict.cols() != a.dim(1))
    throw PreconditionError("dictionary must map degree-1 coordinates to generators");
  LieRep r1;
  r1.lie = LieAlgebra(1, {"e"});
  r1.dimV = 1;
  r1.theta = {SparseMatrix::identity(1)};

  ExpCompareReport rep;
  rep.degree = degree;
  rep.tolerances = tol;
  for (const auto& omega : omega_samples) {
    if (static_cast<int>(omega.size()) != a.dim(1))
      throw PreconditionError("sample length must equal dim in degree 1");
    ExpCompareSample sample;
    sample.omega = omega;
    std::vector<std::pair<Rational, bool>> ts;
    for (const auto& t : t_samples) ts.emplace_back(t, false);
    for (const auto& t : germ_samples) ts.emplace_back(t, true);
    for (const auto& [t, germ] : ts) {
      FlatConnection conn;
      std::vector<std::tuple<int, int, Scalar>> trip;
      for (int m = 0; m < a.dim(1); ++m) {
        Rational v = t * omega[m];
        if (v != 0) trip.emplace_back(m, 0, Scalar(std::move(v)));
      }
      conn.coeffs = SparseMatrix::from_triplets(a.dim(1), 1, std::move(trip));
      ExpComparePoint pt;
      pt.t = t;
      pt.germ_sample = germ;
      pt.beta = aomoto_betti(a, r1, conn, degree)[degree];

      std::vector<std::complex<double>> character(p.generators);
      for (int k = 0; k < p.generators; ++k) {
        Rational expo(0);
        for (int m = 0; m < a.dim(1); ++m) {
          Scalar dk = dict.at(k, m);
          if (!dk.is_zero()) expo += dk.as_rational() * omega[m];
        }
        expo *= t;
        character[k] = std::exp(std::complex<double>(expo.get_d(), 0.0));
      }
      NumericBetti nb = numeric_betti_rank_one(p, character, tol);
      pt.b = degree == 0 ? nb.b0 : nb.b1;
      pt.indeterminate = nb.indeterminate;
      if (pt.indeterminate) {
        ++rep.indeterminate;
      } else {
        pt.inequality_ok = pt.beta <= pt.b;
        if (!pt.inequality_ok) ++rep.violations;
        if (germ) {
          pt.germ_equal = pt.beta == pt.b;
          if (!pt.germ_equal) ++rep.germ_mismatches;
        }
      }
      sample.points.push_back(std::move(pt));
    }
    rep.samples.push_back(std::move(sample));
  }
  return rep;
}

}  // namespace jumploci
