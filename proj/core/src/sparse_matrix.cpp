#include "jumploci/sparse_matrix.hpp"

#include <algorithm>
#include <map>

namespace jumploci {

SparseMatrix::SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.entries_.push_back({i, i, Scalar(1)});
  return m;
}

SparseMatrix SparseMatrix::from_triplets(int rows, int cols,
                                         std::vector<std::tuple<int, int, Scalar>> triplets) {
  SparseMatrix m(rows, cols);
  std::map<std::pair<int, int>, Scalar> acc;
  for (auto& [r, c, v] : triplets) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
      throw PreconditionError("matrix triplet out of range");
    auto it = acc.find({r, c});
    if (it == acc.end())
      acc.emplace(std::make_pair(r, c), std::move(v));
    else
      it->second = it->second + v;
  }
  for (auto& [rc, v] : acc)
    if (!v.is_zero()) m.entries_.push_back({rc.first, rc.second, std::move(v)});
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Scalar>>& d) {
  int rows = static_cast<int>(d.size());
  int cols = rows == 0 ? 0 : static_cast<int>(d[0].size());
  SparseMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(d[r].size()) != cols) throw PreconditionError("ragged dense matrix");
    for (int c = 0; c < cols; ++c)
      if (!d[r][c].is_zero()) m.entries_.push_back({r, c, d[r][c]});
  }
  return m;
}

Scalar SparseMatrix::at(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw PreconditionError("matrix index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                             [](const Entry& e, const std::pair<int, int>& k) {
                               return std::make_pair(e.row, e.col) < k;
                             });
  if (it != entries_.end() && it->row == r && it->col == c) return it->value;
  return Scalar(0);
}

void SparseMatrix::set(int r, int c, Scalar v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
    throw PreconditionError("matrix index out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::make_pair(r, c),
                             [](const Entry& e, const std::pair<int, int>& k) {
                               return std::make_pair(e.row, e.col) < k;
                             });
  const bool present = it != entries_.end() && it->row == r && it->col == c;
  if (v.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->value = std::move(v);
  } else {
    entries_.insert(it, {r, c, std::move(v)});
  }
}

std::vector<std::vector<Scalar>> SparseMatrix::to_dense() const {
  std::vector<std::vector<Scalar>> d(rows_, std::vector<Scalar>(cols_, Scalar(0)));
  for (const auto& e : entries_) d[e.row][e.col] = e.value;
  return d;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix m(cols_, rows_);
  std::vector<std::tuple<int, int, Scalar>> t;
  t.reserve(entries_.size());
  for (const auto& e : entries_) t.emplace_back(e.col, e.row, e.value);
  return from_triplets(cols_, rows_, std::move(t));
}

ScalarKind SparseMatrix::variant() const {
  ScalarKind k = ScalarKind::kRational;
  for (const auto& e : entries_) k = join_kind(k, e.value.kind());
  return k;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& ea : a.entries_)
    for (const auto& eb : b.entries_)
      if (ea.col == eb.row) t.emplace_back(ea.row, eb.col, ea.value * eb.value);
  return SparseMatrix::from_triplets(a.rows_, b.cols_, std::move(t));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw PreconditionError("matrix sum shape mismatch");
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : a.entries_) t.emplace_back(e.row, e.col, e.value);
  for (const auto& e : b.entries_) t.emplace_back(e.row, e.col, e.value);
  return SparseMatrix::from_triplets(a.rows_, a.cols_, std::move(t));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw PreconditionError("matrix difference shape mismatch");
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : a.entries_) t.emplace_back(e.row, e.col, e.value);
  for (const auto& e : b.entries_) t.emplace_back(e.row, e.col, -e.value);
  return SparseMatrix::from_triplets(a.rows_, a.cols_, std::move(t));
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
    return false;
  for (size_t i = 0; i < a.entries_.size(); ++i) {
    const auto& x = a.entries_[i];
    const auto& y = b.entries_[i];
    if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
  }
  return true;
}

SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw PreconditionError("vstack column mismatch");
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : top.entries()) t.emplace_back(e.row, e.col, e.value);
  for (const auto& e : bottom.entries()) t.emplace_back(e.row + top.rows(), e.col, e.value);
  return SparseMatrix::from_triplets(top.rows() + bottom.rows(), top.cols(), std::move(t));
}

SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right) {
  if (left.rows() != right.rows()) throw PreconditionError("hstack row mismatch");
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : left.entries()) t.emplace_back(e.row, e.col, e.value);
  for (const auto& e : right.entries()) t.emplace_back(e.row, e.col + left.cols(), e.value);
  return SparseMatrix::from_triplets(left.rows(), left.cols() + right.cols(), std::move(t));
}

std::vector<Scalar> matvec(const SparseMatrix& m, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != m.cols()) throw PreconditionError("apply shape mismatch");
  std::vector<Scalar> out(m.rows(), Scalar(0));
  for (const auto& e : m.entries()) out[e.row] = out[e.row] + e.value * v[e.col];
  return out;
}

namespace {

// Field elimination on sparse rows with a dense fallback once fill-in passes
// 50%.  With `jordan` set it produces the reduced echelon form (pivots 1,
// pivot columns cleared above and below, pivot rows swapped to the top).
struct Eliminator {
  int rows, cols;
  bool jordan;
  bool dense = false;
  std::vector<std::vector<std::pair<int, Scalar>>> srows;
  std::vector<std::vector<Scalar>> drows;
  std::vector<int> pivot_cols;
  long nnz = 0;

  explicit Eliminator(const SparseMatrix& m, bool jordan_mode)
      : rows(m.rows()), cols(m.cols()), jordan(jordan_mode), srows(m.rows()) {
    for (const auto& e : m.entries()) srows[e.row].emplace_back(e.col, e.value);
    nnz = m.nnz();
    if (rows > 0 && cols > 0 && nnz * 2 > static_cast<long>(rows) * cols) densify();
  }

  void densify() {
    if (dense) return;
    drows.assign(rows, std::vector<Scalar>(cols, Scalar(0)));
    for (int r = 0; r < rows; ++r)
      for (auto& [c, v] : srows[r]) drows[r][c] = std::move(v);
    srows.clear();
    srows.shrink_to_fit();
    dense = true;
  }

  Scalar get(int r, int c) const {
    if (dense) return drows[r][c];
    const auto& row = srows[r];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const std::pair<int, Scalar>& e, int k) { return e.first < k; });
    if (it != row.end() && it->first == c) return it->second;
    return Scalar(0);
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    if (dense)
      std::swap(drows[a], drows[b]);
    else
      std::swap(srows[a], srows[b]);
  }

  void scale_row(int r, const Scalar& f) {
    if (dense) {
      for (auto& v : drows[r])
        if (!v.is_zero()) v = v * f;
    } else {
      for (auto& [c, v] : srows[r]) v = v * f;
    }
  }

  // row_r -= f * row_p
  void row_axpy(int r, int p, const Scalar& f) {
    if (dense) {
      for (int c = 0; c < cols; ++c) {
        if (drows[p][c].is_zero()) continue;
        drows[r][c] = drows[r][c] - f * drows[p][c];
      }
      return;
    }
    const auto& rp = srows[p];
    const auto& rr = srows[r];
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(rr.size() + rp.size());
    size_t i = 0, j = 0;
    while (i < rr.size() || j < rp.size()) {
      if (j == rp.size() || (i < rr.size() && rr[i].first < rp[j].first)) {
        out.push_back(rr[i++]);
      } else if (i == rr.size() || rp[j].first < rr[i].first) {
        out.emplace_back(rp[j].first, -(f * rp[j].second));
        ++j;
      } else {
        Scalar v = rr[i].second - f * rp[j].second;
        if (!v.is_zero()) out.emplace_back(rr[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    nnz += static_cast<long>(out.size()) - static_cast<long>(rr.size());
    srows[r] = std::move(out);
  }

  void run() {
    int next = 0;
    for (int col = 0; col < cols && next < rows; ++col) {
      int best = -1;
      long best_bits = 0;
      for (int r = next; r < rows; ++r) {
        Scalar v = get(r, col);
        if (v.is_zero()) continue;
        long bits = bit_size(v);
        if (best == -1 || bits < best_bits) {
          best = r;
          best_bits = bits;
        }
      }
      if (best == -1) continue;
      swap_rows(next, best);
      Scalar inv = get(next, col).inverse();
      scale_row(next, inv);
      const int lo = jordan ? 0 : next + 1;
      for (int r = lo; r < rows; ++r) {
        if (r == next) continue;
        Scalar v = get(r, col);
        if (!v.is_zero()) row_axpy(r, next, v);
      }
      pivot_cols.push_back(col);
      ++next;
      if (!dense && rows > 0 && cols > 0 && nnz * 2 > static_cast<long>(rows) * cols) densify();
    }
  }

  SparseMatrix result() const {
    std::vector<std::tuple<int, int, Scalar>> t;
    if (dense) {
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
          if (!drows[r][c].is_zero()) t.emplace_back(r, c, drows[r][c]);
    } else {
      for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : srows[r]) t.emplace_back(r, c, v);
    }
    return SparseMatrix::from_triplets(rows, cols, std::move(t));
  }
};

long mpz_bits(const mpz_class& z) { return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2)); }

// Fraction-free Bareiss elimination with full submatrix pivoting.
int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  mpz_class prev(1);
  int k = 0;
  while (k < rows && k < cols) {
    int pr = -1, pc = -1;
    long best_bits = 0;
    for (int r = k; r < rows; ++r)
      for (int c = k; c < cols; ++c) {
        if (m[r][c] == 0) continue;
        long bits = mpz_bits(m[r][c]);
        if (pr == -1 || bits < best_bits) {
          pr = r;
          pc = c;
          best_bits = bits;
        }
      }
    if (pr == -1) break;
    std::swap(m[k], m[pr]);
    if (pc != k)
      for (int r = 0; r < rows; ++r) std::swap(m[r][k], m[r][pc]);
    for (int r = k + 1; r < rows; ++r) {
      for (int c = k + 1; c < cols; ++c) {
        mpz_class num = m[k][k] * m[r][c] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[r][k] = 0;
    }
    prev = m[k][k];
    ++k;
  }
  return k;
}

}  // namespace

int rank_exact(const SparseMatrix& m) {
  if (m.variant() == ScalarKind::kRational) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols(), 0));
    std::vector<mpz_class> lcm(m.rows(), 1);
    for (const auto& e : m.entries()) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm[e.row].get_mpz_t(),
              e.value.as_rational().get_den_mpz_t());
      lcm[e.row] = l;
    }
    for (const auto& e : m.entries()) {
      const Rational& q = e.value.as_rational();
      z[e.row][e.col] = q.get_num() * (lcm[e.row] / q.get_den());
    }
    return bareiss_rank(std::move(z));
  }
  Eliminator e(m, /*jordan=*/false);
  e.run();
  return static_cast<int>(e.pivot_cols.size());
}

SparseMatrix rref(const SparseMatrix& m) {
  Eliminator e(m, /*jordan=*/true);
  e.run();
  return e.result();
}

std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m) {
  const int cols = m.cols();
  SparseMatrix r = rref(m);
  // Pivot columns are the first nonzero column of each nonzero row.
  std::vector<int> pivot_of_col(cols, -1);
  std::vector<int> row_first(r.rows(), -1);
  for (const auto& e : r.entries())
    if (row_first[e.row] == -1 || e.col < row_first[e.row]) row_first[e.row] = e.col;
  for (int row = 0; row < r.rows(); ++row)
    if (row_first[row] >= 0) pivot_of_col[row_first[row]] = row;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < cols; ++c) {
    if (pivot_of_col[c] != -1) continue;
    std::vector<Scalar> v(cols, Scalar(0));
    v[c] = Scalar(1);
    for (int p = 0; p < cols; ++p)
      if (pivot_of_col[p] != -1) v[p] = -r.at(pivot_of_col[p], c);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  // Canonicalize: the vectors written as rows in reduced echelon form.
  SparseMatrix b = rref(SparseMatrix::from_dense(basis));
  std::vector<std::vector<Scalar>> out;
  auto dense = b.to_dense();
  for (auto& row : dense) {
    bool zero = true;
    for (const auto& v : row)
      if (!v.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) out.push_back(std::move(row));
  }
  return out;
}

int rank_generic(const SparseMatrix& m) {
  ScalarKind k = m.variant();
  if (k == ScalarKind::kGaussian)
    throw VariantMismatchError("generic rank needs rational or rational-function entries");
  if (k == ScalarKind::kRational) return rank_exact(m);
  Eliminator e(m, /*jordan=*/false);
  e.run();
  return static_cast<int>(e.pivot_cols.size());
}

SparseMatrix specialize_t(const SparseMatrix& m, const Rational& t0) {
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : m.entries()) {
    switch (e.value.kind()) {
      case ScalarKind::kRational: t.emplace_back(e.row, e.col, e.value); break;
      case ScalarKind::kRatFunc:
        t.emplace_back(e.row, e.col, Scalar(e.value.as_rat_func().eval(t0)));
        break;
      case ScalarKind::kGaussian:
        throw VariantMismatchError("cannot specialize Gaussian entries at t");
    }
  }
  return SparseMatrix::from_triplets(m.rows(), m.cols(), std::move(t));
}

std::optional<SparseMatrix> inverse(const SparseMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of non-square matrix");
  const int n = m.rows();
  SparseMatrix aug = rref(hstack(m, SparseMatrix::identity(n)));
  for (int i = 0; i < n; ++i)
    if (!aug.at(i, i).is_one()) return std::nullopt;
  std::vector<std::tuple<int, int, Scalar>> t;
  for (const auto& e : aug.entries())
    if (e.col >= n) t.emplace_back(e.row, e.col - n, e.value);
  return SparseMatrix::from_triplets(n, n, std::move(t));
}

std::optional<std::vector<Scalar>> solve_linear(const SparseMatrix& m,
                                                const std::vector<Scalar>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw PreconditionError("solve shape mismatch");
  SparseMatrix b(m.rows(), 1);
  for (int r = 0; r < m.rows(); ++r) b.set(r, 0, rhs[r]);
  SparseMatrix aug = rref(hstack(m, b));
  std::vector<int> row_first(aug.rows(), -1);
  for (const auto& e : aug.entries())
    if (row_first[e.row] == -1 || e.col < row_first[e.row]) row_first[e.row] = e.col;
  std::vector<Scalar> x(m.cols(), Scalar(0));
  for (int row = 0; row < aug.rows(); ++row) {
    if (row_first[row] == -1) continue;
    if (row_first[row] == m.cols()) return std::nullopt;  // pivot in rhs column
    x[row_first[row]] = aug.at(row, m.cols());
  }
  return x;
}

}  // namespace jumploci
