#include "jumploci/resonance.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace jumploci {

namespace {

GradedElement column_element(const Cdga& a, const SparseMatrix& coeffs, int col) {
  GradedElement x{1, std::vector<Scalar>(a.dim(1), Scalar(0))};
  for (const auto& e : coeffs.entries())
    if (e.col == col) x.c[e.row] = e.value;
  return x;
}

SparseMatrix matrix_from_columns(int rows, const std::vector<GradedElement>& cols) {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (int r = 0; r < rows; ++r)
      if (!cols[c].c[r].is_zero()) t.emplace_back(r, c, cols[c].c[r]);
  return SparseMatrix::from_triplets(rows, static_cast<int>(cols.size()), std::move(t));
}

SparseMatrix scaled_matrix(const SparseMatrix& m, const Scalar& f) {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : m.entries()) t.emplace_back(e.row, e.col, e.value * f);
  return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(t));
}

LieRep line_rep() {
  LieRep r;
  r.lie = LieAlgebra(1, {"e"});
  r.dimV = 1;
  r.theta = {SparseMatrix::identity(1)};
  return r;
}

std::string subspace_key(const LinearSubspaceQ& s) {
  std::string k = std::to_string(s.codim()) + "|";
  for (const auto& e : s.equations.entries())
    k += std::to_string(e.row) + "," + std::to_string(e.col) + "," + e.value.str() + ";";
  return k;
}

// Equal elements deduplicated, then proper subspaces of another element dropped;
// output sorted by (codimension, canonical equation key).
std::vector<LinearSubspaceQ> maximal_elements(std::vector<LinearSubspaceQ> list) {
  std::sort(list.begin(), list.end(), [](const LinearSubspaceQ& a, const LinearSubspaceQ& b) {
    return subspace_key(a) < subspace_key(b);
  });
  list.erase(std::unique(list.begin(), list.end()), list.end());
  std::vector<LinearSubspaceQ> out;
  for (const auto& s : list) {
    bool dominated = false;
    for (const auto& t : list)
      if (!(t == s) && s.subspace_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

}  // namespace

LinearSubspaceQ LinearSubspaceQ::whole(int ambient_dim) {
  return {ambient_dim, SparseMatrix(0, ambient_dim)};
}

LinearSubspaceQ LinearSubspaceQ::from_equations(int ambient_dim, const SparseMatrix& eqs) {
  if (eqs.cols() != ambient_dim) throw PreconditionError("equation width mismatch");
  SparseMatrix r = rref(eqs);
  std::vector<std::tuple<int, int, Scalar>> t;
  int nonzero_rows = 0;
  for (const auto& e : r.entries()) {
    t.emplace_back(e.row, e.col, e.value);
    nonzero_rows = std::max(nonzero_rows, e.row + 1);
  }
  return {ambient_dim, SparseMatrix::from_triplets(nonzero_rows, ambient_dim, std::move(t))};
}

LinearSubspaceQ LinearSubspaceQ::from_span(int ambient_dim,
                                           const std::vector<std::vector<Rational>>& span) {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (int r = 0; r < static_cast<int>(span.size()); ++r) {
    if (static_cast<int>(span[r].size()) != ambient_dim)
      throw PreconditionError("span vector length mismatch");
    for (int c = 0; c < ambient_dim; ++c)
      if (span[r][c] != 0) t.emplace_back(r, c, Scalar(span[r][c]));
  }
  auto vecs = kernel_basis(
      SparseMatrix::from_triplets(static_cast<int>(span.size()), ambient_dim, std::move(t)));
  std::vector<std::tuple<int, int, Scalar>> eq;
  for (int r = 0; r < static_cast<int>(vecs.size()); ++r)
    for (int c = 0; c < ambient_dim; ++c)
      if (!vecs[r][c].is_zero()) eq.emplace_back(r, c, vecs[r][c]);
  return {ambient_dim, SparseMatrix::from_triplets(static_cast<int>(vecs.size()), ambient_dim,
                                                   std::move(eq))};
}

bool LinearSubspaceQ::contains(const std::vector<Rational>& z) const {
  if (static_cast<int>(z.size()) != ambient_dim)
    throw PreconditionError("point length mismatch");
  std::vector<Rational> acc(equations.rows(), Rational(0));
  for (const auto& e : equations.entries()) acc[e.row] += e.value.as_rational() * z[e.col];
  for (const auto& v : acc)
    if (v != 0) return false;
  return true;
}

bool LinearSubspaceQ::subspace_of(const LinearSubspaceQ& other) const {
  if (ambient_dim != other.ambient_dim) throw PreconditionError("ambient dimension mismatch");
  return rank_exact(vstack(equations, other.equations)) == equations.rows();
}

std::vector<std::vector<Rational>> LinearSubspaceQ::span() const {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : kernel_basis(equations)) {
    std::vector<Rational> row;
    for (const auto& s : v) row.push_back(s.as_rational());
    out.push_back(std::move(row));
  }
  return out;
}

bool resonance_membership(const Cdga& a, const LieRep& r, const FlatConnection& omega, int i,
                          int depth) {
  if (!is_flat(a, r.lie, omega))
    throw PreconditionError("connection is not flat; membership is undefined");
  if (depth <= 0) return true;
  return aomoto_betti(a, r, omega, i)[i] >= depth;
}

std::vector<LineScanPoint> line_scan(const Cdga& a, const LieRep& r, const FlatConnection& omega,
                                     const std::vector<Rational>& samples, int i, ScanMode mode) {
  std::vector<LineScanPoint> out;
  for (const Rational& t : samples) {
    FlatConnection scaled;
    if (mode == ScanMode::kPlainScaling) {
      scaled.coeffs = scaled_matrix(omega.coeffs, Scalar(t));
    } else {
      std::vector<GradedElement> cols;
      for (int al = 0; al < omega.coeffs.cols(); ++al)
        cols.push_back(apply_weight_action(a, t, column_element(a, omega.coeffs, al)));
      scaled.coeffs = matrix_from_columns(a.dim(1), cols);
    }
    LineScanPoint pt;
    pt.t = t;
    pt.flat = is_flat(a, r.lie, scaled);
    if (pt.flat) pt.beta = aomoto_betti(a, r, scaled, i)[i];
    out.push_back(std::move(pt));
  }
  return out;
}

int generic_betti(const Cdga& a, const LieRep& r, const FlatConnection& omega, int i) {
  if (i < 0) throw PreconditionError("cohomological degree must be nonnegative");
  // The line t.omega is flat for every t exactly when the two terms of the
  // residual vanish separately.
  std::vector<GradedElement> cols;
  for (int al = 0; al < r.lie.dim; ++al) cols.push_back(column_element(a, omega.coeffs, al));
  auto residual = mc_residual(a, r.lie, omega);
  for (int g = 0; g < r.lie.dim; ++g) {
    GradedElement dpart = a.d(cols[g]);
    if (!dpart.is_zero() || !(residual[g] - dpart).is_zero())
      throw PreconditionError("the line through this connection leaves the flat locus");
  }
  FlatConnection family;
  family.coeffs = scaled_matrix(omega.coeffs, Scalar(RationalFunction::t()));
  AomotoComplex cx = aomoto_matrices(a, r, family, i);
  const int below = i > 0 ? rank_generic(cx.matrices[i - 1]) : 0;
  return a.dim(i) * r.dimV - rank_generic(cx.matrices[i]) - below;
}

namespace {

struct ComponentSearch {
  const Cdga& a;
  const JumpLocusDescription& desc;
  long budget;
  long evals = 0;
  bool exhausted = false;

  bool spend() {
    if (evals >= budget) {
      exhausted = true;
      return false;
    }
    ++evals;
    return true;
  }

  bool member(const std::vector<Rational>& z) {
    return spend() && jump_locus_satisfied(desc, z);
  }

  // A subspace is inside the locus iff after substituting a symbolic point
  // of it the mc polynomials vanish and one piece vanishes identically.
  bool certified(const LinearSubspaceQ& s) {
    if (s.dim() == 0) {
      return member(std::vector<Rational>(s.ambient_dim, Rational(0)));
    }
    if (!spend()) return false;
    auto basis = s.span();
    const int k = static_cast<int>(basis.size());
    std::vector<MultiPoly> images;
    for (int v = 0; v < s.ambient_dim; ++v) {
      MultiPoly img(k);
      for (int m = 0; m < k; ++m)
        if (basis[m][v] != 0) {
          MultiPoly::Exponents ex(k, 0);
          ex[m] = 1;
          img.add_term(ex, basis[m][v]);
        }
      images.push_back(std::move(img));
    }
    for (const auto& p : desc.mc)
      if (!p.substitute(images, k).is_zero()) return false;
    if (desc.pieces.empty()) return true;
    for (const auto& piece : desc.pieces) {
      bool all = true;
      for (const auto& g : piece.generators)
        if (!g.substitute(images, k).is_zero()) {
          all = false;
          break;
        }
      if (all) return true;
    }
    return false;
  }
};

std::vector<std::vector<Rational>> merged_span(const LinearSubspaceQ& x,
                                               const LinearSubspaceQ& y) {
  auto span = x.span();
  for (auto& v : y.span()) span.push_back(std::move(v));
  return span;
}

}  // namespace

ComponentReport linear_components_rank_one(const Cdga& a, int i, int depth, long search_budget) {
  WeightReport wr = validate_weights(a);
  if (!a.has_weights() || !wr.positive || !wr.violations.empty())
    throw PreconditionError("positive weights are required");
  if (a.diff(1).nnz() != 0)
    throw PreconditionError("the degree-1 differential must vanish");
  const LieRep r1 = line_rep();
  JumpLocusDescription desc = jump_locus_generators(a, r1, i, depth);
  const int m = a.dim(1);

  ComponentSearch search{a, desc, search_budget};
  ComponentReport rep;

  std::vector<std::vector<Rational>> members;
  bool zero_member = false;
  {
    std::vector<int> idx(m, -2);
    bool done = m == 0;
    while (!done && !search.exhausted) {
      std::vector<Rational> z;
      bool zero = true;
      for (int v : idx) {
        z.emplace_back(v);
        if (v != 0) zero = false;
      }
      if (search.member(z)) {
        if (zero)
          zero_member = true;
        else
          members.push_back(std::move(z));
      }
      int pos = m - 1;
      while (pos >= 0 && idx[pos] == 2) idx[pos--] = -2;
      if (pos < 0)
        done = true;
      else
        ++idx[pos];
    }
    if (m == 0) zero_member = search.member({});
  }

  std::vector<LinearSubspaceQ> candidates;
  std::set<std::string> seen;
  auto add_candidate = [&](const LinearSubspaceQ& s) {
    if (s.dim() <= 0) return;
    if (seen.insert(subspace_key(s)).second) candidates.push_back(s);
  };
  for (const auto& p : members) {
    add_candidate(LinearSubspaceQ::from_span(m, {p}));
    for (const auto& piece : desc.pieces) {
      bool sat = true;
      for (const auto& g : piece.generators)
        if (g.eval(p) != 0) {
          sat = false;
          break;
        }
      if (!sat) continue;
      std::vector<std::tuple<int, int, Scalar>> rows;
      int nrows = 0;
      for (const auto& g : piece.generators) {
        bool nonzero = false;
        for (int v = 0; v < m; ++v) {
          Rational gr = g.derivative(v).eval(p);
          if (gr != 0) {
            rows.emplace_back(nrows, v, Scalar(gr));
            nonzero = true;
          }
        }
        if (nonzero) ++nrows;
      }
      auto ker = kernel_basis(SparseMatrix::from_triplets(nrows, m, std::move(rows)));
      std::vector<std::vector<Rational>> span;
      for (const auto& v : ker) {
        std::vector<Rational> row;
        for (const auto& s : v) row.push_back(s.as_rational());
        span.push_back(std::move(row));
      }
      add_candidate(LinearSubspaceQ::from_span(m, span));
      break;
    }
  }

  std::vector<LinearSubspaceQ> certified;
  std::set<std::string> cert_keys;
  std::sort(candidates.begin(), candidates.end(),
            [](const LinearSubspaceQ& x, const LinearSubspaceQ& y) {
              if (x.dim() != y.dim()) return x.dim() > y.dim();
              return subspace_key(x) < subspace_key(y);
            });
  for (const auto& c : candidates) {
    if (search.exhausted) break;
    bool below_max = false;
    for (const auto& t : certified)
      if (c.subspace_of(t)) {
        below_max = true;
        break;
      }
    if (below_max) continue;
    if (search.certified(c) && cert_keys.insert(subspace_key(c)).second) certified.push_back(c);
  }

  bool changed = true;
  while (changed && !search.exhausted) {
    changed = false;
    for (size_t x = 0; x < certified.size() && !changed; ++x)
      for (size_t y = x + 1; y < certified.size() && !changed; ++y) {
        LinearSubspaceQ merged =
            LinearSubspaceQ::from_span(m, merged_span(certified[x], certified[y]));
        if (merged == certified[x] || merged == certified[y]) continue;
        if (cert_keys.count(subspace_key(merged))) continue;
        if (search.certified(merged)) {
          cert_keys.insert(subspace_key(merged));
          certified.push_back(merged);
          changed = true;
        }
      }
  }

  if (zero_member && certified.empty())
    certified.push_back(LinearSubspaceQ::from_span(m, {}));

  rep.components = maximal_elements(std::move(certified));

  for (const auto& s : rep.components) {
    bool homogeneous = true;
    auto basis = s.span();
    const int k = static_cast<int>(basis.size());
    std::set<int> weight_values;
    for (int v = 0; v < m; ++v) weight_values.insert(a.weight(1, v));
    std::vector<std::tuple<int, int, Scalar>> bt;
    for (int r = 0; r < k; ++r)
      for (int v = 0; v < m; ++v)
        if (basis[r][v] != 0) bt.emplace_back(r, v, Scalar(basis[r][v]));
    SparseMatrix bmat = SparseMatrix::from_triplets(k, m, std::move(bt));
    for (int w : weight_values) {
      for (int r = 0; r < k && homogeneous; ++r) {
        std::vector<std::tuple<int, int, Scalar>> pt;
        for (int v = 0; v < m; ++v)
          if (a.weight(1, v) == w && basis[r][v] != 0) pt.emplace_back(0, v, Scalar(basis[r][v]));
        SparseMatrix proj = SparseMatrix::from_triplets(1, m, std::move(pt));
        if (rank_exact(vstack(bmat, proj)) != k) homogeneous = false;
      }
      if (!homogeneous) break;
    }
    rep.weighted_homogeneous.push_back(homogeneous);
  }

  rep.complete = !search.exhausted;
  rep.evaluations = search.evals;
  return rep;
}

WeightFrame identity_frame(int n, std::vector<int> weights) {
  WeightFrame f;
  f.M = SparseMatrix::identity(n);
  f.weights = weights.empty() ? std::vector<int>(n, 1) : std::move(weights);
  return f;
}

namespace {

struct WetcContext {
  int n = 0;
  std::vector<int> weights;
  std::vector<int> distinct_weights;
  SparseMatrix minv;
  std::vector<std::vector<Rational>> um;  // (u^T M) per support point
  const LaurentPoly* f = nullptr;
  std::vector<LinearSubspaceQ> found;

  void emit(const std::vector<int>& blocks, int nblocks) {
    // Equal-polynomial conditions per block, written over y = M^{-1} z,
    // one equation per (pair, weight value).
    std::vector<std::vector<Rational>> rows;
    for (int b = 0; b < nblocks; ++b) {
      int rep = -1;
      for (size_t u = 0; u < blocks.size(); ++u) {
        if (blocks[u] != b) continue;
        if (rep < 0) {
          rep = static_cast<int>(u);
          continue;
        }
        for (int w : distinct_weights) {
          std::vector<Rational> row(n, Rational(0));
          bool nonzero = false;
          for (int j = 0; j < n; ++j) {
            if (weights[j] != w) continue;
            row[j] = um[u][j] - um[rep][j];
            if (row[j] != 0) nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    std::vector<std::tuple<int, int, Scalar>> t;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      for (int c = 0; c < n; ++c)
        if (rows[r][c] != 0) t.emplace_back(r, c, Scalar(rows[r][c]));
    SparseMatrix over_y = SparseMatrix::from_triplets(static_cast<int>(rows.size()), n,
                                                      std::move(t));
    found.push_back(LinearSubspaceQ::from_equations(n, over_y * minv));
  }

  void recurse(std::vector<int>& blocks, std::vector<Rational>& sums, int pos, int nblocks) {
    const int s = static_cast<int>(blocks.size());
    if (pos == s) {
      for (int b = 0; b < nblocks; ++b)
        if (sums[b] != 0) return;
      emit(blocks, nblocks);
      return;
    }
    int open = 0;
    for (int b = 0; b < nblocks; ++b)
      if (sums[b] != 0) ++open;
    if (open > s - pos) return;  // not enough elements left to close the sums
    for (int b = 0; b <= nblocks && b < s; ++b) {
      blocks[pos] = b;
      const bool fresh = b == nblocks;
      if (fresh) sums.push_back(Rational(0));
      sums[b] += f->coeffs[pos];
      recurse(blocks, sums, pos + 1, nblocks + (fresh ? 1 : 0));
      sums[b] -= f->coeffs[pos];
      if (fresh) sums.pop_back();
    }
  }
};

}  // namespace

std::vector<LinearSubspaceQ> wetc(const LaurentPoly& f, const WeightFrame& frame) {
  const int n = f.nvars;
  const int s = static_cast<int>(f.support.size());
  if (s == 0 || f.coeffs.size() != f.support.size())
    throw PreconditionError("support and coefficients must be parallel and nonempty");
  if (s > 12) throw PreconditionError("support too large (max 12 terms)");
  for (const auto& u : f.support)
    if (static_cast<int>(u.size()) != n) throw PreconditionError("exponent vector length mismatch");
  for (const auto& c : f.coeffs)
    if (c == 0) throw PreconditionError("zero coefficient in support");
  Rational total(0);
  for (const auto& c : f.coeffs) total += c;
  if (total != 0)
    throw PreconditionError("f(1) != 0: the identity is not a point of the zero set");
  if (frame.M.rows() != n || frame.M.cols() != n)
    throw PreconditionError("frame matrix must be n x n");
  if (static_cast<int>(frame.weights.size()) != n)
    throw PreconditionError("frame weight count mismatch");
  for (int w : frame.weights)
    if (w < 1) throw PreconditionError("frame weights must be positive");
  auto minv = inverse(frame.M);
  if (!minv) throw PreconditionError("frame matrix must be invertible");

  WetcContext ctx;
  ctx.n = n;
  ctx.weights = frame.weights;
  {
    std::set<int> ws(frame.weights.begin(), frame.weights.end());
    ctx.distinct_weights.assign(ws.begin(), ws.end());
  }
  ctx.minv = *minv;
  ctx.f = &f;
  for (const auto& u : f.support) {
    std::vector<Rational> row(n, Rational(0));
    for (int j = 0; j < n; ++j)
      for (int i2 = 0; i2 < n; ++i2) {
        Scalar mij = frame.M.at(i2, j);
        if (!mij.is_zero()) row[j] += Rational(u[i2]) * mij.as_rational();
      }
    ctx.um.push_back(std::move(row));
  }

  std::vector<int> blocks(s, 0);
  std::vector<Rational> sums;
  ctx.recurse(blocks, sums, 0, 0);
  return maximal_elements(std::move(ctx.found));
}

FnReport fn_degeneration(const Cdga& h, const std::vector<Rational>& nu, int q) {
  for (int deg = 0; deg < h.top_degree(); ++deg)
    if (h.diff(deg).nnz() != 0)
      throw PreconditionError("a zero differential is required");
  if (static_cast<int>(nu.size()) != h.dim(1))
    throw PreconditionError("direction length must equal dim in degree 1");
  const LieRep r1 = line_rep();
  FlatConnection omega;
  std::vector<std::tuple<int, int, Scalar>> t;
  for (int m = 0; m < h.dim(1); ++m)
    if (nu[m] != 0) t.emplace_back(m, 0, Scalar(nu[m]));
  omega.coeffs = SparseMatrix::from_triplets(h.dim(1), 1, std::move(t));

  FnReport rep;
  rep.e2 = aomoto_betti(h, r1, omega, q);
  for (int i = 0; i <= q; ++i) rep.generic.push_back(generic_betti(h, r1, omega, i));
  rep.degenerate = rep.e2 == rep.generic;
  return rep;
}

}  // namespace jumploci
