#include "jumploci/aomoto.hpp"

#include <algorithm>

namespace jumploci {

namespace {

void check_connection_shape(const Cdga& a, int edim, const FlatConnection& omega) {
  if (omega.coeffs.rows() != a.dim(1) || omega.coeffs.cols() != edim)
    throw PreconditionError("connection matrix must be dim A^1 x dim b");
}

GradedElement column_element(const Cdga& a, const SparseMatrix& coeffs, int col) {
  GradedElement x{1, std::vector<Scalar>(a.dim(1), Scalar(0))};
  for (const auto& e : coeffs.entries())
    if (e.col == col) x.c[e.row] = e.value;
  return x;
}

const Rational& rational_entry(const Scalar& s, const char* what) {
  if (s.kind() != ScalarKind::kRational)
    throw PreconditionError(std::string(what) + " must have rational entries");
  return s.as_rational();
}

void require_degrees_through(const Cdga& a, int deg) {
  if (!a.degree_known(deg))
    throw PreconditionError("degrees through " + std::to_string(deg) +
                            " are required but the algebra stops at degree " +
                            std::to_string(a.top_degree()) + " without a zero-above marker");
}

}  // namespace

std::vector<GradedElement> mc_residual(const Cdga& a, const LieAlgebra& e,
                                       const FlatConnection& omega) {
  check_connection_shape(a, e.dim, omega);
  require_degrees_through(a, 2);
  const Scalar half(Rational(1, 2));
  std::vector<GradedElement> out;
  std::vector<GradedElement> cols;
  for (int al = 0; al < e.dim; ++al) cols.push_back(column_element(a, omega.coeffs, al));
  for (int g = 0; g < e.dim; ++g) {
    GradedElement res = a.d(cols[g]);
    for (int al = 0; al < e.dim; ++al)
      for (int be = 0; be < e.dim; ++be) {
        if (al == be) continue;
        const Scalar c = e.bracket(al, be)[g];
        if (c.is_zero()) continue;
        res = res + scaled(a.multiply(cols[al], cols[be]), half * c);
      }
    out.push_back(std::move(res));
  }
  return out;
}

bool is_flat(const Cdga& a, const LieAlgebra& e, const FlatConnection& omega) {
  for (const auto& r : mc_residual(a, e, omega))
    if (!r.is_zero()) return false;
  return true;
}

AomotoComplex aomoto_matrices(const Cdga& a, const LieRep& r, const FlatConnection& omega, int q) {
  check_connection_shape(a, r.lie.dim, omega);
  if (q < 0) throw PreconditionError("degree bound must be nonnegative");
  require_degrees_through(a, q + 1);
  const int ell = r.dimV;
  AomotoComplex cx;
  cx.dimV = ell;
  std::vector<GradedElement> cols;
  for (int al = 0; al < r.lie.dim; ++al) cols.push_back(column_element(a, omega.coeffs, al));
  for (int i = 0; i <= q; ++i) {
    const int rows = a.dim(i + 1) * ell, colsn = a.dim(i) * ell;
    std::vector<std::tuple<int, int, Scalar>> t;
    const SparseMatrix di = a.diff(i);
    for (const auto& en : di.entries())
      for (int p = 0; p < ell; ++p)
        t.emplace_back(en.row * ell + p, en.col * ell + p, en.value);
    for (int al = 0; al < r.lie.dim; ++al) {
      if (cols[al].is_zero()) continue;
      for (int m = 0; m < a.dim(i); ++m) {
        GradedElement prod = a.multiply(cols[al], a.basis_element(i, m));
        for (int k = 0; k < static_cast<int>(prod.c.size()); ++k) {
          if (prod.c[k].is_zero()) continue;
          for (const auto& te : r.theta[al].entries())
            t.emplace_back(k * ell + te.row, m * ell + te.col, prod.c[k] * te.value);
        }
      }
    }
    cx.matrices.push_back(SparseMatrix::from_triplets(rows, colsn, std::move(t)));
  }
  return cx;
}

std::vector<int> aomoto_betti(const Cdga& a, const LieRep& r, const FlatConnection& omega, int q) {
  if (!is_flat(a, r.lie, omega))
    throw PreconditionError("connection is not flat; twisted cohomology is undefined");
  AomotoComplex cx = aomoto_matrices(a, r, omega, q);
  std::vector<int> beta;
  int prev_rank = 0;
  for (int i = 0; i <= q; ++i) {
    const int n = a.dim(i) * r.dimV;
    const int rk = rank_exact(cx.matrices[i]);
    beta.push_back(n - rk - prev_rank);
    prev_rank = rk;
  }
  return beta;
}

std::vector<std::string> connection_variable_names(const Cdga& a, const LieAlgebra& e) {
  std::vector<std::string> names;
  for (int m = 0; m < a.dim(1); ++m)
    for (int al = 0; al < e.dim; ++al) {
      std::string n = "z_" + a.label(1, m);
      if (e.dim > 1) n += "_" + e.labels[al];
      names.push_back(std::move(n));
    }
  return names;
}

std::vector<MultiPoly> mc_equations(const Cdga& a, const LieAlgebra& e) {
  require_degrees_through(a, 2);
  const int edim = e.dim;
  const int nvars = a.dim(1) * edim;
  const Rational half(1, 2);
  std::vector<MultiPoly> out(a.dim(2) * edim, MultiPoly(nvars));
  auto var = [&](int m, int al) { return m * edim + al; };

  const SparseMatrix d1 = a.diff(1);
  for (const auto& en : d1.entries()) {
    const Rational& c = rational_entry(en.value, "differential");
    for (int g = 0; g < edim; ++g) {
      MultiPoly::Exponents ex(nvars, 0);
      ex[var(en.col, g)] = 1;
      out[en.row * edim + g].add_term(ex, c);
    }
  }

  for (int al = 0; al < edim; ++al)
    for (int be = 0; be < edim; ++be) {
      if (al == be) continue;
      const std::vector<Scalar> br = e.bracket(al, be);
      for (int g = 0; g < edim; ++g) {
        if (br[g].is_zero()) continue;
        const Rational c = half * rational_entry(br[g], "bracket");
        for (int m = 0; m < a.dim(1); ++m)
          for (int n = 0; n < a.dim(1); ++n) {
            const std::vector<Scalar> prod = a.product(1, m, 1, n);
            for (int k = 0; k < a.dim(2); ++k) {
              if (prod[k].is_zero()) continue;
              MultiPoly::Exponents ex(nvars, 0);
              ex[var(m, al)] += 1;
              ex[var(n, be)] += 1;
              out[k * edim + g].add_term(ex, c * rational_entry(prod[k], "product"));
            }
          }
      }
    }
  return out;
}

UniversalAomoto universal_aomoto_matrices(const Cdga& a, const LieRep& r, int q) {
  if (q < 0) throw PreconditionError("degree bound must be nonnegative");
  require_degrees_through(a, q + 1);
  UniversalAomoto u;
  u.dimV = r.dimV;
  u.var_names = connection_variable_names(a, r.lie);
  u.nvars = static_cast<int>(u.var_names.size());
  const int ell = r.dimV, edim = r.lie.dim;
  for (int i = 0; i <= q; ++i) {
    const int rows = a.dim(i + 1) * ell, cols = a.dim(i) * ell;
    u.shapes.emplace_back(rows, cols);
    std::vector<std::vector<MultiPoly>> mat(rows, std::vector<MultiPoly>(cols, MultiPoly(u.nvars)));
    const SparseMatrix di = a.diff(i);
    for (const auto& en : di.entries()) {
      const Rational& c = rational_entry(en.value, "differential");
      for (int p = 0; p < ell; ++p) {
        MultiPoly::Exponents ex(u.nvars, 0);
        mat[en.row * ell + p][en.col * ell + p].add_term(ex, c);
      }
    }
    for (int j = 0; j < a.dim(1); ++j)
      for (int m = 0; m < a.dim(i); ++m) {
        const std::vector<Scalar> prod = a.product(1, j, i, m);
        for (int k = 0; k < a.dim(i + 1); ++k) {
          if (prod[k].is_zero()) continue;
          const Rational& pk = rational_entry(prod[k], "product");
          for (int al = 0; al < edim; ++al)
            for (const auto& te : r.theta[al].entries()) {
              MultiPoly::Exponents ex(u.nvars, 0);
              ex[j * edim + al] = 1;
              mat[k * ell + te.row][m * ell + te.col].add_term(
                  ex, pk * rational_entry(te.value, "representation"));
            }
        }
      }
    u.matrices.push_back(std::move(mat));
  }
  return u;
}

AomotoComplex specialize(const UniversalAomoto& u, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != u.nvars)
    throw PreconditionError("specialization point has wrong length");
  AomotoComplex cx;
  cx.dimV = u.dimV;
  for (size_t d = 0; d < u.matrices.size(); ++d) {
    const auto& mat = u.matrices[d];
    const auto [rows, cols] = u.shapes[d];
    std::vector<std::tuple<int, int, Scalar>> t;
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) {
        Rational v = mat[r][c].eval(z);
        if (v != 0) t.emplace_back(r, c, Scalar(std::move(v)));
      }
    cx.matrices.push_back(SparseMatrix::from_triplets(rows, cols, std::move(t)));
  }
  return cx;
}

namespace {

// All (size x size)-minors of a dense polynomial matrix; none when the size
// exceeds either dimension.
void append_minors(const std::vector<std::vector<MultiPoly>>& mat, int size, int nvars,
                   std::vector<MultiPoly>& out) {
  const int rows = static_cast<int>(mat.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(mat[0].size());
  if (size < 1 || size > rows || size > cols) return;
  std::vector<int> ri(size), ci(size);
  for (int i = 0; i < size; ++i) ri[i] = i;
  auto advance = [](std::vector<int>& idx, int n) {
    const int k = static_cast<int>(idx.size());
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    for (int i = 0; i < size; ++i) ci[i] = i;
    do {
      std::vector<std::vector<MultiPoly>> sub(size, std::vector<MultiPoly>(size, MultiPoly(nvars)));
      for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) sub[i][j] = mat[ri[i]][ci[j]];
      out.push_back(poly_determinant(sub, nvars));
    } while (advance(ci, cols));
  } while (advance(ri, rows));
}

std::vector<MultiPoly> canonical_generators(std::vector<MultiPoly> gens) {
  std::vector<MultiPoly> out;
  for (auto& g : gens)
    if (!g.is_zero()) out.push_back(g.normalized());
  std::sort(out.begin(), out.end(), MultiPoly::less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

JumpLocusDescription jump_locus_generators(const Cdga& a, const LieRep& r, int i, int depth) {
  if (i < 0) throw PreconditionError("cohomological degree must be nonnegative");
  require_degrees_through(a, i + 1);
  JumpLocusDescription d;
  d.degree = i;
  d.depth = depth;
  d.var_names = connection_variable_names(a, r.lie);
  d.nvars = static_cast<int>(d.var_names.size());
  d.mc = mc_equations(a, r.lie);

  const int ell = r.dimV;
  const int n_i = a.dim(i) * ell;
  const int n_below = a.dim(i - 1) * ell;
  if (depth <= 0) return d;
  if (depth > n_i) {
    d.empty = true;
    return d;
  }

  UniversalAomoto u = universal_aomoto_matrices(a, r, i);
  const std::vector<std::vector<MultiPoly>> empty_mat;
  const auto& below = i > 0 ? u.matrices[i - 1] : empty_mat;
  const auto& above = u.matrices[i];

  for (int ra = 0; ra <= std::min(n_below, n_i - depth); ++ra) {
    const int rb = n_i - depth - ra;
    JumpLocusPiece piece;
    piece.rank_bound_below = ra;
    piece.rank_bound_above = rb;
    std::vector<MultiPoly> gens;
    append_minors(below, ra + 1, u.nvars, gens);
    append_minors(above, rb + 1, u.nvars, gens);
    piece.generators = canonical_generators(std::move(gens));
    bool duplicate = false;
    for (const auto& other : d.pieces)
      if (other.generators == piece.generators) {
        duplicate = true;
        break;
      }
    if (!duplicate) d.pieces.push_back(std::move(piece));
  }
  return d;
}

bool jump_locus_satisfied(const JumpLocusDescription& d, const std::vector<Rational>& z) {
  if (static_cast<int>(z.size()) != d.nvars)
    throw PreconditionError("point has wrong length");
  if (d.empty) return false;
  for (const auto& p : d.mc)
    if (p.eval(z) != 0) return false;
  if (d.pieces.empty()) return true;
  for (const auto& piece : d.pieces) {
    bool all_zero = true;
    for (const auto& g : piece.generators)
      if (g.eval(z) != 0) {
        all_zero = false;
        break;
      }
    if (all_zero) return true;
  }
  return false;
}

}  // namespace jumploci
