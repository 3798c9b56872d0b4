#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "colorlie/scalar.hpp"

namespace colorlie {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& v);
/// y += s * x
void axpy(Vector& y, const Scalar& s, const Vector& x);
/// Lexicographic order on coordinates using lex_less on scalars.
bool lex_less(const Vector& a, const Vector& b);
/// "(a,b,...)"
std::string vector_string(const Vector& v);

/// Dense row-major matrix over Q(i). Products skip zero entries of the left
/// factor, which keeps the sparse matrices that dominate this domain cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const Vector> columns, std::size_t height);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t width);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  /// this += s * o
  void add_scaled(const Scalar& s, const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// tr(a * b) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);
/// a*b - s*b*a
Matrix graded_commutator(const Matrix& a, const Matrix& b, int s);

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m);
std::size_t rank(Matrix m);
std::size_t rank(std::span<const Vector> vectors);

/// Basis of {x : m x = 0}. Basis vector s carries 1 at the s-th free column
/// and 0 at every other free column, so the coordinates of a kernel element
/// are read off at the free columns.
struct KernelBasis {
  std::vector<Vector> basis;
  std::vector<std::size_t> free_columns;
};
KernelBasis kernel_with_free_columns(const Matrix& m);
std::vector<Vector> kernel(const Matrix& m);

std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates of vectors with respect to a fixed linearly independent list.
class SpanSolver {
 public:
  SpanSolver() = default;
  /// Throws DomainError(LinearlyDependent) if the list is dependent.
  explicit SpanSolver(std::span<const Vector> basis);

  std::size_t dim() const { return basis_size_; }
  std::size_t ambient() const { return ambient_; }
  /// Coefficients c with w = sum c_k basis_k, or nullopt if w leaves the span.
  std::optional<Vector> coordinates(const Vector& w) const;
  /// w minus its reduction against the span (zero iff w is in the span).
  Vector residual(const Vector& w) const;
  bool contains(const Vector& w) const { return ::colorlie::is_zero(residual(w)); }

 private:
  std::size_t ambient_ = 0;
  std::size_t basis_size_ = 0;
  Matrix echelon_;                 // rows reduced, identity at pivots
  std::vector<std::size_t> pivots_;
  Matrix transform_;               // transform_ * basis_rows = echelon_
};

/// Growing span kept in reduced echelon form; insert() reports novelty.
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t ambient) : ambient_(ambient) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  /// Reduces v against the span; returns the nonzero remainder when v is new.
  std::optional<Vector> reduce(const Vector& v) const;
  bool insert(const Vector& v);
  bool contains(const Vector& v) const { return !reduce(v).has_value(); }
  /// The stored reduced rows (a basis, not the inserted vectors).
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Joint eigenspace of a commuting family.
struct JointEigenspace {
  std::vector<Scalar> eigenvalues;  // one per operator
  std::vector<Vector> basis;        // ambient coordinates
};

/// Simultaneous eigenspaces of commuting diagonalizable operators restricted
/// to the invariant subspace spanned by `start`. Splits one operator at a
/// time via exact characteristic polynomials and Gaussian-rational roots.
/// Throws IrrationalEigenvalue or NonDiagonalizable. Output is sorted by
/// eigenvalue vector (lex, descending).
std::vector<JointEigenspace> joint_eigenspaces(std::span<const Matrix> ops, std::span<const Vector> start,
                                               const char* operation);

}  // namespace colorlie
