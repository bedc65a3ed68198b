#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

// Sparse exact matrix.  Entries are kept sorted by (row, col) with no
// explicit zeros and no duplicates.  All entries must live in compatible
// scalar variants: plain rationals mix with either extension, Gaussian and
// rational-function entries do not mix with each other.
class SparseMatrix {
 public:
  struct Entry {
    int row, col;
    Scalar value;
  };

  SparseMatrix() : rows_(0), cols_(0) {}
  SparseMatrix(int rows, int cols);
  static SparseMatrix identity(int n);
  static SparseMatrix from_triplets(int rows, int cols,
                                    std::vector<std::tuple<int, int, Scalar>> triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<Scalar>>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nnz() const { return static_cast<int>(entries_.size()); }
  const std::vector<Entry>& entries() const { return entries_; }

  Scalar at(int r, int c) const;
  void set(int r, int c, Scalar v);  // v == 0 clears the slot

  std::vector<std::vector<Scalar>> to_dense() const;
  SparseMatrix transpose() const;
  ScalarKind variant() const;  // join of entry variants; rational when empty

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator!=(const SparseMatrix& a, const SparseMatrix& b) { return !(a == b); }

 private:
  int rows_, cols_;
  std::vector<Entry> entries_;
};

SparseMatrix vstack(const SparseMatrix& top, const SparseMatrix& bottom);
SparseMatrix hstack(const SparseMatrix& left, const SparseMatrix& right);
std::vector<Scalar> matvec(const SparseMatrix& m, const std::vector<Scalar>& v);

// Exact rank.  Rational matrices go through fraction-free Bareiss elimination
// after row-wise denominator clearing, with the pivot chosen as the smallest
// bit-size entry of the remaining submatrix, ties broken by (row, col).
// Other variants use field elimination (pivot per column by the same rule),
// on sparse rows with a dense fallback once fill-in exceeds 50%.
int rank_exact(const SparseMatrix& m);

// Reduced row echelon form over the entry field.  Shape is preserved:
// pivot rows first (by pivot column), zero rows at the bottom.
SparseMatrix rref(const SparseMatrix& m);

// Right kernel.  Vectors are canonical: written as rows they form a reduced
// echelon matrix, so each vector's first nonzero entry is 1.
std::vector<std::vector<Scalar>> kernel_basis(const SparseMatrix& m);

// Rank over the rational-function field Q(t).  Rational entries are treated
// as constants; Gaussian entries are rejected.
int rank_generic(const SparseMatrix& m);

// Evaluate a rational/rational-function matrix at t = t0.
// Hitting a pole raises PreconditionError.
SparseMatrix specialize_t(const SparseMatrix& m, const Rational& t0);

// Exact inverse of a square matrix; nullopt when singular.
std::optional<SparseMatrix> inverse(const SparseMatrix& m);

// One solution of m x = rhs if the system is consistent (free variables 0).
std::optional<std::vector<Scalar>> solve_linear(const SparseMatrix& m,
                                                const std::vector<Scalar>& rhs);

}  // namespace jumploci
