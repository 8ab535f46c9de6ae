#ifndef SCHUREXT_MATRIX_HPP
#define SCHUREXT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "schurext/fp.hpp"

namespace schurext {

using Vec = std::vector<u32>;
// Sparse vector: (index, value) pairs with strictly increasing index and nonzero values.
using SVec = std::vector<std::pair<u32, u32>>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, u32 p);

  static Matrix identity(std::size_t n, u32 p);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols, u32 p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32 prime() const { return p_; }

  u32& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  u32 at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  u32* row_ptr(std::size_t i) { return data_.data() + i * cols_; }
  const u32* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void set_row(std::size_t i, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(u32 s) const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix kron(const Matrix& a, const Matrix& b);

  const std::vector<u32>& data() const { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  u32 p_ = 2;
  std::vector<u32> data_;
};

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols, u32 p);

  static SparseMatrix from_dense(const Matrix& m);
  static SparseMatrix identity(std::size_t n, u32 p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32 prime() const { return p_; }
  std::size_t nnz() const;
  bool empty() const { return nnz() == 0; }

  // Adds v to entry (i, j).
  void add(std::size_t i, std::size_t j, u32 v);
  const SVec& row(std::size_t i) const { return rows_v_[i]; }
  SVec& row_mut(std::size_t i) { return rows_v_[i]; }
  u32 get(std::size_t i, std::size_t j) const;

  Matrix to_dense() const;
  SparseMatrix transpose() const;
  SparseMatrix operator*(const SparseMatrix& o) const;
  SparseMatrix operator+(const SparseMatrix& o) const;
  SparseMatrix scaled(u32 s) const;
  Vec apply(const Vec& v) const;
  SVec apply(const SVec& v) const;
  static SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);
  bool operator==(const SparseMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  u32 p_ = 2;
  std::vector<SVec> rows_v_;
};

struct RrefResult {
  Matrix R;
  std::vector<std::size_t> pivots;
};

// Matrices with rows*cols above this use the sparse elimination path.
constexpr std::size_t kDefaultSparseThreshold = 256 * 256;

RrefResult rref(const Matrix& m, std::size_t sparse_threshold = kDefaultSparseThreshold);
RrefResult rref_dense(const Matrix& m);
RrefResult rref_sparse(const Matrix& m);
// Sparse elimination on a list of sparse rows; returns the nonzero rows of the RREF.
std::pair<std::vector<SVec>, std::vector<std::size_t>> rref_rows(std::vector<SVec> rows,
                                                                 std::size_t cols, u32 p);

std::size_t rank(const Matrix& m);
// Basis of {v : M v = 0}, one vector per row of the result.
Matrix nullspace(const Matrix& m);
Matrix nullspace_sparse(const std::vector<SVec>& rows, std::size_t cols, u32 p);
// Basis of {v : v M = 0}.
Matrix left_nullspace(const Matrix& m);
// Solves A X = B; nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

struct Eigensplit {
  Matrix plus;   // rows: basis of the +1 eigenspace
  Matrix minus;  // rows: basis of the -1 eigenspace
};
Eigensplit eigensplit_involution(const Matrix& t);

// Incrementally maintained reduced row echelon basis of a subspace of F_p^n.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(std::size_t n, u32 p) : n_(n), f_(p) {}

  std::size_t ambient() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return piv_; }

  // Reduces v modulo the span in place.
  void reduce(Vec& v) const;
  bool contains(const Vec& v) const;
  // Adds v; returns false if it was already in the span.
  bool add(const Vec& v);
  // Coordinates of v with respect to rows(); v must lie in the span.
  Vec coords(const Vec& v) const;
  Matrix to_matrix() const;

 private:
  std::size_t n_ = 0;
  Fp f_{2};
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
};

// Matrices over F_p[t] stored as a coefficient stack M = sum_k M_k t^k.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t degree_bound, u32 p);
  static PolyMatrix constant(const Matrix& m);
  static PolyMatrix identity(std::size_t n, u32 p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t degree_bound() const { return coeffs_.size() - 1; }
  u32 prime() const { return p_; }

  Matrix& coeff(std::size_t k) { return coeffs_[k]; }
  const Matrix& coeff(std::size_t k) const { return coeffs_[k]; }
  // Polynomial entry (i, j) as a coefficient list.
  Vec entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const Vec& poly);

  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix operator+(const PolyMatrix& o) const;
  PolyMatrix transpose() const;
  Matrix eval(u32 t) const;
  // Drops trailing zero coefficients (keeps at least the constant term).
  void trim();
  bool operator==(const PolyMatrix& o) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  u32 p_ = 2;
  std::vector<Matrix> coeffs_;
};

std::vector<Matrix> poly_coeff_stack(const PolyMatrix& m);

}  // namespace schurext

#endif
