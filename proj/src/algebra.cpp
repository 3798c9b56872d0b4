#include "colorlie/algebra.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "colorlie/errors.hpp"

namespace colorlie {

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out.emplace_back(k, v[k]);
  return out;
}

namespace {

Vector to_dense(const SparseVector& s, std::size_t n) {
  Vector v(n);
  for (const auto& [k, c] : s) v[k] = c;
  return v;
}

// acc += coef * sum_{(l,a) in x} a [e_l, e_k]
void add_bracket_with_basis(const GradedAlgebra& g, Vector& acc, const Scalar& coef, const SparseVector& x,
                            std::size_t k) {
  for (const auto& [l, a] : x) {
    Scalar f = coef * a;
    for (const auto& [m, c] : g.structure(l, k)) acc[m].add_product(f, c);
  }
}

// acc += coef * sum_{(l,b) in y} b [e_i, e_l]
void add_basis_with_bracket(const GradedAlgebra& g, Vector& acc, const Scalar& coef, std::size_t i,
                            const SparseVector& y) {
  for (const auto& [l, b] : y) {
    Scalar f = coef * b;
    for (const auto& [m, c] : g.structure(i, l)) acc[m].add_product(f, c);
  }
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::vector<Degree> degrees, const StructureTable& table, std::vector<std::string> labels)
    : degrees_(std::move(degrees)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != degrees_.size())
    throw DomainError(ErrorKind::DimensionMismatch, "GradedAlgebra", "label count differs from dimension");
  build(table);
}

GradedAlgebra GradedAlgebra::abelian(std::vector<Degree> degrees) { return GradedAlgebra(std::move(degrees), {}); }

void GradedAlgebra::build(const StructureTable& table) {
  const std::size_t n = dim();
  table_.assign(n * n, {});
  for (const auto& [key, v] : table) {
    auto [i, j] = key;
    if (i >= n || j >= n || v.size() != n)
      throw DomainError(ErrorKind::DimensionMismatch, "GradedAlgebra",
                        "structure entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
    table_[i * n + j] = to_sparse(v);
  }
  for (const auto& [key, v] : table) {
    auto [i, j] = key;
    if (i == j || table.count({j, i}) != 0) continue;
    Scalar f(-sign(degrees_[i], degrees_[j]));
    SparseVector partner;
    for (const auto& [k, c] : table_[i * n + j]) partner.emplace_back(k, f * c);
    table_[j * n + i] = std::move(partner);
  }
  ad_.assign(n, Matrix(n, n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : table_[i * n + j]) ad_[i](k, j) = c;
}

std::string GradedAlgebra::label(std::size_t i) const {
  return labels_.empty() ? "e" + std::to_string(i) : labels_[i];
}

Matrix GradedAlgebra::ad(const Vector& x) const {
  if (x.size() != dim()) throw DomainError(ErrorKind::DimensionMismatch, "ad", "coefficient vector length");
  Matrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) m.add_scaled(x[i], ad_[i]);
  return m;
}

Vector GradedAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim())
    throw DomainError(ErrorKind::DimensionMismatch, "bracket", "coefficient vector length");
  Vector out(dim());
  SparseVector ys = to_sparse(y);
  for (std::size_t i = 0; i < dim(); ++i)
    if (!x[i].is_zero()) add_basis_with_bracket(*this, out, x[i], i, ys);
  return out;
}

Vector GradedAlgebra::basis_bracket(std::size_t i, std::size_t j) const { return to_dense(structure(i, j), dim()); }

std::vector<std::size_t> GradedAlgebra::indices_of_degree(Degree d) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i)
    if (degrees_[i] == d) out.push_back(i);
  return out;
}

std::optional<Degree> GradedAlgebra::homogeneous_degree(const Vector& x) const {
  std::optional<Degree> d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (d && *d != degrees_[i]) return std::nullopt;
    d = degrees_[i];
  }
  return d;
}

bool GradedAlgebra::is_abelian() const {
  return std::all_of(table_.begin(), table_.end(), [](const SparseVector& s) { return s.empty(); });
}

StructureTable GradedAlgebra::upper_table() const {
  StructureTable out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!structure(i, j).empty()) out[{i, j}] = basis_bracket(i, j);
  return out;
}

GradedAlgebra GradedAlgebra::with_entry(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) const {
  StructureTable full;
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t b = 0; b < dim(); ++b)
      if (!structure(a, b).empty()) full[{a, b}] = basis_bracket(a, b);
  auto [it, inserted] = full.try_emplace({i, j}, Vector(dim()));
  it->second[k] = value;
  (void)inserted;
  return GradedAlgebra(degrees_, full, labels_);
}

std::size_t MatrixRealization::ambient_dim() const {
  std::size_t m = 0;
  for (auto s : block_sizes) m += s;
  return m;
}

std::size_t MatrixRealization::block_of(std::size_t index) const {
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block_sizes.size(); ++b) {
    offset += block_sizes[b];
    if (index < offset) return b;
  }
  throw DomainError(ErrorKind::DimensionMismatch, "MatrixRealization", "index outside ambient space");
}

Degree MatrixRealization::entry_degree(std::size_t r, std::size_t c) const {
  return block_degrees[block_of(r)][block_of(c)];
}

std::optional<std::vector<Degree>> MatrixRealization::space_grading() const {
  const std::size_t nb = block_sizes.size();
  std::vector<Degree> g(nb);
  for (std::size_t b = 0; b < nb; ++b) g[b] = block_degrees[b][0];
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b)
      if (block_degrees[a][b] != g[a] + g[b]) return std::nullopt;
  std::vector<Degree> out;
  for (std::size_t b = 0; b < nb; ++b) out.insert(out.end(), block_sizes[b], g[b]);
  return out;
}

Matrix MatrixRealization::expand(const Vector& coeffs) const {
  if (coeffs.size() != matrices.size())
    throw DomainError(ErrorKind::DimensionMismatch, "MatrixRealization::expand", "coefficient count");
  Matrix m(ambient_dim(), ambient_dim());
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) m.add_scaled(coeffs[i], matrices[i]);
  return m;
}

std::vector<std::vector<Degree>> additive_block_degrees(const std::vector<Degree>& block_grading) {
  std::vector<std::vector<Degree>> out(block_grading.size(), std::vector<Degree>(block_grading.size()));
  for (std::size_t a = 0; a < block_grading.size(); ++a)
    for (std::size_t b = 0; b < block_grading.size(); ++b) out[a][b] = block_grading[a] + block_grading[b];
  return out;
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

void validate_realization(const MatrixRealization& real, const char* operation) {
  const std::size_t m = real.ambient_dim();
  const std::size_t nb = real.block_sizes.size();
  if (real.block_degrees.size() != nb)
    throw DomainError(ErrorKind::DimensionMismatch, operation, "block degree table has wrong size");
  for (const auto& row : real.block_degrees)
    if (row.size() != nb) throw DomainError(ErrorKind::DimensionMismatch, operation, "block degree table has wrong size");
  if (real.degrees.size() != real.matrices.size())
    throw DomainError(ErrorKind::DimensionMismatch, operation, "one degree per matrix required");
  if (!real.labels.empty() && real.labels.size() != real.matrices.size())
    throw DomainError(ErrorKind::DimensionMismatch, operation, "one label per matrix required");
  for (std::size_t i = 0; i < real.matrices.size(); ++i) {
    const Matrix& x = real.matrices[i];
    if (x.rows() != m || x.cols() != m)
      throw DomainError(ErrorKind::DimensionMismatch, operation, "matrix " + std::to_string(i) + " is not ambient-sized");
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c)
        if (!x(r, c).is_zero() && real.entry_degree(r, c) != real.degrees[i])
          throw DomainError(ErrorKind::NotHomogeneous, operation,
                            "matrix " + std::to_string(i) + " has entry (" + std::to_string(r) + "," +
                                std::to_string(c) + ") outside degree " + real.degrees[i].to_string());
  }
}

}  // namespace

std::optional<Vector> realization_coordinates(const MatrixRealization& real, const Matrix& m) {
  std::vector<Vector> flat;
  flat.reserve(real.matrices.size());
  for (const auto& x : real.matrices) flat.push_back(flatten(x));
  SpanSolver solver(flat);
  return solver.coordinates(flatten(m));
}

GradedAlgebra from_matrices(const MatrixRealization& real) {
  validate_realization(real, "from_matrices");
  const std::size_t n = real.matrices.size();
  std::vector<Vector> flat;
  flat.reserve(n);
  for (const auto& x : real.matrices) flat.push_back(flatten(x));
  std::optional<SpanSolver> solver;
  try {
    solver.emplace(flat);
  } catch (const DomainError& e) {
    throw DomainError(ErrorKind::LinearlyDependent, "from_matrices", "basis matrices are dependent");
  }
  StructureTable table;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix c = graded_commutator(real.matrices[i], real.matrices[j], sign(real.degrees[i], real.degrees[j]));
      if (c.is_zero()) continue;
      Vector w = flatten(c);
      auto coords = solver->coordinates(w);
      if (!coords) {
        Vector res = solver->residual(w);
        std::size_t at = 0;
        while (res[at].is_zero()) ++at;
        const std::size_t m = real.ambient_dim();
        std::ostringstream msg;
        msg << "[" << (real.labels.empty() ? "e" + std::to_string(i) : real.labels[i]) << ", "
            << (real.labels.empty() ? "e" + std::to_string(j) : real.labels[j]) << "] leaves the span; residual entry ("
            << at / m << "," << at % m << ") = " << res[at];
        throw DomainError(ErrorKind::NotClosed, "from_matrices", msg.str());
      }
      table[{i, j}] = std::move(*coords);
    }
  return GradedAlgebra(real.degrees, table, real.labels);
}

MatrixRealization gl_graded(const std::map<Degree, std::size_t>& dims) {
  MatrixRealization real;
  std::vector<Degree> grading;
  for (Degree d : kAllDegrees) {
    auto it = dims.find(d);
    if (it == dims.end() || it->second == 0) continue;
    real.block_sizes.push_back(it->second);
    grading.push_back(d);
  }
  if (grading.empty()) throw DomainError(ErrorKind::EmptySpace, "gl_graded", "total dimension is zero");
  real.block_degrees = additive_block_degrees(grading);
  const std::size_t m = real.ambient_dim();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      Matrix e(m, m);
      e(r, c) = Scalar(1);
      real.matrices.push_back(std::move(e));
      real.degrees.push_back(real.entry_degree(r, c));
      real.labels.push_back("E" + std::to_string(r) + "_" + std::to_string(c));
    }
  return real;
}

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  std::vector<Degree> degrees = a.degrees();
  degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
  for (std::size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
  StructureTable table;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (a.structure(i, j).empty()) continue;
      Vector v(n);
      for (const auto& [k, c] : a.structure(i, j)) v[k] = c;
      table[{i, j}] = std::move(v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      if (b.structure(i, j).empty()) continue;
      Vector v(n);
      for (const auto& [k, c] : b.structure(i, j)) v[a.dim() + k] = c;
      table[{a.dim() + i, a.dim() + j}] = std::move(v);
    }
  return GradedAlgebra(std::move(degrees), table, std::move(labels));
}

AxiomReport check_axioms(const GradedAlgebra& g) {
  AxiomReport report;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n && report.grading.pass; ++i)
    for (std::size_t j = 0; j < n && report.grading.pass; ++j) {
      Degree target = g.degree(i) + g.degree(j);
      for (const auto& [k, c] : g.structure(i, j)) {
        if (g.degree(k) == target) continue;
        report.grading.pass = false;
        report.grading.witness = {i, j, k};
        report.grading.lhs = g.basis_bracket(i, j);
        report.grading.rhs = Vector(n);
        for (const auto& [m, cm] : g.structure(i, j))
          if (g.degree(m) == target) report.grading.rhs[m] = cm;
        break;
      }
    }
  for (std::size_t i = 0; i < n && report.antisymmetry.pass; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector lhs = g.basis_bracket(j, i);
      Vector rhs = Scalar(-sign(g.degree(i), g.degree(j))) * g.basis_bracket(i, j);
      if (lhs == rhs) continue;
      report.antisymmetry = {report.antisymmetry.axiom, false, {i, j}, std::move(lhs), std::move(rhs)};
      break;
    }
  for (std::size_t i = 0; i < n && report.jacobi.pass; ++i)
    for (std::size_t j = 0; j < n && report.jacobi.pass; ++j) {
      const Scalar s(sign(g.degree(i), g.degree(j)));
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs(n), rhs(n);
        add_basis_with_bracket(g, lhs, Scalar(1), i, g.structure(j, k));
        add_bracket_with_basis(g, rhs, Scalar(1), g.structure(i, j), k);
        add_basis_with_bracket(g, rhs, s, j, g.structure(i, k));
        if (lhs == rhs) continue;
        report.jacobi = {report.jacobi.axiom, false, {i, j, k}, std::move(lhs), std::move(rhs)};
        break;
      }
    }
  return report;
}

BilinearForm killing_form(const GradedAlgebra& g) {
  const std::size_t n = g.dim();
  struct Entry {
    std::size_t r, c;
    const Scalar* v;
  };
  std::vector<std::vector<Entry>> nz(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, c] : g.structure(i, j)) nz[i].push_back({k, j, &c});
  BilinearForm form{Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t;
      const Matrix& b = g.ad(j);
      for (const auto& e : nz[i]) {
        const Scalar& y = b(e.c, e.r);
        if (!y.is_zero()) t.add_product(*e.v, y);
      }
      form.gram(i, j) = t;
      form.gram(j, i) = t;
    }
  return form;
}

std::vector<Vector> killing_radical(const GradedAlgebra& g) { return kernel(killing_form(g).gram); }

BasicVerdict is_basic(const GradedAlgebra& g) {
  BasicVerdict v;
  v.radical_dim = killing_radical(g).size();
  v.killing_nondegenerate = v.radical_dim == 0;

  const std::size_t n = g.dim();
  auto even = g.indices_of_degree(Degree(0, 0));
  const std::size_t e = even.size();

  // Center of the even part: sum a_t e_{even[t]} commuting with every even basis element.
  Matrix sys(e * n, e);
  for (std::size_t t = 0; t < e; ++t)
    for (std::size_t s = 0; s < e; ++s)
      for (const auto& [k, c] : g.structure(even[t], even[s])) sys(s * n + k, t) = c;
  std::vector<Vector> center;
  for (const auto& a : kernel(sys)) {
    Vector x(n);
    for (std::size_t t = 0; t < e; ++t) x[even[t]] = a[t];
    center.push_back(std::move(x));
  }
  IncrementalSpan derived(n);
  for (std::size_t t = 0; t < e; ++t)
    for (std::size_t s = t + 1; s < e; ++s) derived.insert(g.basis_bracket(even[t], even[s]));
  v.even_center_dim = center.size();
  v.even_derived_dim = derived.dim();

  IncrementalSpan both = derived;
  for (const auto& z : center) both.insert(z);
  bool splits = both.dim() == e && center.size() + derived.dim() == e;

  bool derived_semisimple = true;
  if (splits && derived.dim() > 0) {
    const auto& d = derived.basis();
    SpanSolver solver(d);
    std::vector<Matrix> ads;
    for (const auto& x : d) {
      Matrix a(d.size(), d.size());
      for (std::size_t b = 0; b < d.size(); ++b) {
        auto c = solver.coordinates(g.bracket(x, d[b]));
        if (!c) throw DomainError(ErrorKind::InconsistentRootSystem, "is_basic", "derived even part not closed");
        for (std::size_t r = 0; r < d.size(); ++r) a(r, b) = (*c)[r];
      }
      ads.push_back(std::move(a));
    }
    Matrix gram(d.size(), d.size());
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = a; b < d.size(); ++b) gram(a, b) = gram(b, a) = trace_of_product(ads[a], ads[b]);
    derived_semisimple = rank(gram) == d.size();
  }
  v.even_part_reductive = splits && derived_semisimple;
  v.basic = v.killing_nondegenerate && v.even_part_reductive;
  if (!v.killing_nondegenerate)
    v.reason = "Killing form has a radical of dimension " + std::to_string(v.radical_dim);
  else if (!splits)
    v.reason = "even part is not the direct sum of its center and derived algebra";
  else if (!derived_semisimple)
    v.reason = "derived even part has a degenerate Killing form";
  return v;
}

std::vector<Vector> ideal_closure(const GradedAlgebra& g, const Vector& x) {
  const std::size_t n = g.dim();
  IncrementalSpan span(n);
  if (!span.insert(x)) return {};
  std::deque<Vector> queue{x};
  while (!queue.empty() && span.dim() < n) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t j = 0; j < n && span.dim() < n; ++j) {
      Vector w = g.ad(j) * v;
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.basis();
}

SimplicityVerdict graded_simplicity_probe(const GradedAlgebra& g, std::size_t trials, std::uint64_t seed) {
  SimplicityVerdict out;
  const std::size_t n = g.dim();
  if (n == 0) {
    out.reason = "zero algebra";
    return out;
  }
  if (g.is_abelian()) {
    out.reason = "abelian (simple algebras are required to be nonabelian)";
    if (n > 1) out.witness = {unit_vector(n, 0)};
    return out;
  }
  auto probe = [&](const Vector& x, const std::string& from) {
    auto ideal = ideal_closure(g, x);
    if (ideal.empty() || ideal.size() == n) return false;
    out.witness = std::move(ideal);
    out.reason = "ideal generated by " + from + " has dimension " + std::to_string(out.witness.size());
    return true;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (probe(unit_vector(n, i), g.label(i))) return out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-3, 3);
  for (Degree d : kAllDegrees) {
    auto idx = g.indices_of_degree(d);
    if (idx.empty()) continue;
    for (std::size_t t = 0; t < trials; ++t) {
      Vector x(n);
      for (auto i : idx) x[i] = Scalar(coef(rng));
      if (is_zero(x)) x[idx.front()] = Scalar(1);
      if (probe(x, "a random element of degree " + d.to_string())) return out;
    }
  }
  out.probably_simple = true;
  out.reason = "every probed ideal is the whole algebra";
  return out;
}

}  // namespace colorlie
