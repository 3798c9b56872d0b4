#include "colorlie/linalg.hpp"

#include <algorithm>
#include <utility>

#include "colorlie/errors.hpp"

namespace colorlie {

Vector zero_vector(std::size_t n) { return Vector(n); }

std::string vector_string(const Vector& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].to_string();
  return s + ")";
}

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v(n);
  v[k] = Scalar(1);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

Vector operator*(const Scalar& s, const Vector& v) {
  Vector r(v.size());
  if (s.is_zero()) return r;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) r[k] = s * v[k];
  return r;
}

void axpy(Vector& y, const Scalar& s, const Vector& x) {
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k].add_product(s, x[k]);
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Scalar& x, const Scalar& y) { return lex_less(x, y); });
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, std::size_t height) {
  Matrix m(height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t width) {
  Matrix m(rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < width; ++c) m(r, c) = rows[r][c];
  return m;
}

Vector Matrix::row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Matrix::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Scalar& s) { return !s.is_zero(); }));
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) t += (*this)(k, k);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError(ErrorKind::DimensionMismatch, "Matrix::operator+=", "shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError(ErrorKind::DimensionMismatch, "Matrix::operator-=", "shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : data_)
    if (!x.is_zero()) x *= s;
  return *this;
}

void Matrix::add_scaled(const Scalar& s, const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw DomainError(ErrorKind::DimensionMismatch, "Matrix::add_scaled", "shape mismatch");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!o.data_[k].is_zero()) data_[k].add_product(s, o.data_[k]);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError(ErrorKind::DimensionMismatch, "Matrix::operator*", "inner dimensions differ");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) c(i, j).add_product(x, y);
      }
    }
  }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  if (a.cols_ != v.size()) throw DomainError(ErrorKind::DimensionMismatch, "Matrix*Vector", "length mismatch");
  Vector out(a.rows_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows_; ++i) {
      const Scalar& x = a(i, k);
      if (!x.is_zero()) out[i].add_product(x, v[k]);
    }
  }
  return out;
}

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw DomainError(ErrorKind::DimensionMismatch, "trace_of_product", "shape mismatch");
  Scalar t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      const Scalar& y = b(k, i);
      if (!y.is_zero()) t.add_product(x, y);
    }
  return t;
}

Matrix graded_commutator(const Matrix& a, const Matrix& b, int s) {
  Matrix c = a * b;
  c.add_scaled(Scalar(-s), b * a);
  return c;
}

namespace {

// RREF restricted to the first `ncols` columns; the remaining columns ride
// along with the row operations.
std::vector<std::size_t> rref_prefix(Matrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar f = -m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c).add_product(f, m(row, c));
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> rref(Matrix& m) { return rref_prefix(m, m.cols()); }

std::size_t rank(Matrix m) { return rref(m).size(); }

std::size_t rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  IncrementalSpan span(vectors.front().size());
  for (const auto& v : vectors) span.insert(v);
  return span.dim();
}

KernelBasis kernel_with_free_columns(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref(r);
  KernelBasis out;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Scalar(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      if (!r(k, f).is_zero()) v[pivots[k]] = -r(k, f);
    out.basis.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

std::vector<Vector> kernel(const Matrix& m) { return kernel_with_free_columns(m).basis; }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  auto pivots = rref_prefix(aug, a.cols());
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!aug(r, a.cols()).is_zero()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  if (rref_prefix(aug, n).size() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

SpanSolver::SpanSolver(std::span<const Vector> basis) : basis_size_(basis.size()) {
  ambient_ = basis.empty() ? 0 : basis.front().size();
  std::size_t k = basis.size();
  Matrix aug(k, ambient_ + k);
  for (std::size_t r = 0; r < k; ++r) {
    if (basis[r].size() != ambient_)
      throw DomainError(ErrorKind::DimensionMismatch, "SpanSolver", "basis vectors of unequal length");
    for (std::size_t c = 0; c < ambient_; ++c) aug(r, c) = basis[r][c];
    aug(r, ambient_ + r) = Scalar(1);
  }
  pivots_ = rref_prefix(aug, ambient_);
  if (pivots_.size() != k)
    throw DomainError(ErrorKind::LinearlyDependent, "SpanSolver",
                      "rank " + std::to_string(pivots_.size()) + " < " + std::to_string(k));
  echelon_ = Matrix(k, ambient_);
  transform_ = Matrix(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < ambient_; ++c) echelon_(r, c) = aug(r, c);
    for (std::size_t c = 0; c < k; ++c) transform_(r, c) = aug(r, ambient_ + c);
  }
}

Vector SpanSolver::residual(const Vector& w) const {
  Vector res = w;
  for (std::size_t s = 0; s < pivots_.size(); ++s) {
    Scalar f = w[pivots_[s]];
    if (f.is_zero()) continue;
    f = -f;
    for (std::size_t c = 0; c < ambient_; ++c)
      if (!echelon_(s, c).is_zero()) res[c].add_product(f, echelon_(s, c));
  }
  return res;
}

std::optional<Vector> SpanSolver::coordinates(const Vector& w) const {
  if (w.size() != ambient_) throw DomainError(ErrorKind::DimensionMismatch, "SpanSolver::coordinates", "length mismatch");
  if (!::colorlie::is_zero(residual(w))) return std::nullopt;
  Vector c(basis_size_);
  for (std::size_t s = 0; s < pivots_.size(); ++s) {
    const Scalar& r = w[pivots_[s]];
    if (r.is_zero()) continue;
    for (std::size_t j = 0; j < basis_size_; ++j)
      if (!transform_(s, j).is_zero()) c[j].add_product(r, transform_(s, j));
  }
  return c;
}

std::optional<Vector> IncrementalSpan::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DomainError(ErrorKind::DimensionMismatch, "IncrementalSpan", "length mismatch");
  Vector w = v;
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    if (w[pivots_[s]].is_zero()) continue;
    Scalar f = -w[pivots_[s]];
    axpy(w, f, rows_[s]);
  }
  if (::colorlie::is_zero(w)) return std::nullopt;
  return w;
}

bool IncrementalSpan::insert(const Vector& v) {
  auto w = reduce(v);
  if (!w) return false;
  std::size_t p = 0;
  while ((*w)[p].is_zero()) ++p;
  Scalar inv = (*w)[p].inverse();
  for (auto& x : *w)
    if (!x.is_zero()) x *= inv;
  rows_.push_back(std::move(*w));
  pivots_.push_back(p);
  return true;
}

}  // namespace colorlie
