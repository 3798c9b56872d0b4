#include "colorlie/representation.hpp"

#include <algorithm>
#include <map>

#include "colorlie/errors.hpp"

namespace colorlie {

const char* const kTensorConvention =
    "x(v (x) w) = (xv) (x) w + (-1)^{pairing(|x|,|v|)} v (x) (xw); basis v_i (x) w_j at index i*dim2+j";

Representation::Representation(std::shared_ptr<const GradedAlgebra> algebra, std::vector<Matrix> matrices,
                               std::optional<std::vector<Degree>> grading)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)), grading_(std::move(grading)) {
  if (!algebra_) throw DomainError(ErrorKind::InvalidArgument, "Representation", "no algebra");
  if (matrices_.size() != algebra_->dim())
    throw DomainError(ErrorKind::DimensionMismatch, "Representation",
                      std::to_string(matrices_.size()) + " matrices for an algebra of dimension " +
                          std::to_string(algebra_->dim()));
  dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
  if (matrices_.empty() && grading_) dim_ = grading_->size();
  if (dim_ == 0) throw DomainError(ErrorKind::InvalidArgument, "Representation", "module dimension is 0");
  for (std::size_t i = 0; i < matrices_.size(); ++i)
    if (matrices_[i].rows() != dim_ || matrices_[i].cols() != dim_)
      throw DomainError(ErrorKind::DimensionMismatch, "Representation",
                        "matrix " + std::to_string(i) + " is not " + std::to_string(dim_) + "x" + std::to_string(dim_));
  if (grading_ && grading_->size() != dim_)
    throw DomainError(ErrorKind::DimensionMismatch, "Representation", "grading length differs from the dimension");
}

Matrix Representation::act(const Vector& x) const {
  Matrix out(dim_, dim_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) out.add_scaled(x[i], matrices_[i]);
  return out;
}

Representation Representation::with_grading(std::optional<std::vector<Degree>> grading) const {
  Representation r(algebra_, matrices_, std::move(grading));
  r.tensor_convention_ = tensor_convention_;
  return r;
}

Representation adjoint_representation(std::shared_ptr<const GradedAlgebra> g) {
  std::vector<Matrix> m;
  for (std::size_t i = 0; i < g->dim(); ++i) m.push_back(g->ad(i));
  std::vector<Degree> grading = g->degrees();
  return Representation(std::move(g), std::move(m), std::move(grading));
}

Representation trivial_representation(std::shared_ptr<const GradedAlgebra> g) {
  std::vector<Matrix> m(g->dim(), Matrix(1, 1));
  return Representation(std::move(g), std::move(m), std::vector<Degree>{Degree()});
}

Representation defining_representation(std::shared_ptr<const GradedAlgebra> g, const MatrixRealization& real) {
  return Representation(std::move(g), real.matrices, real.space_grading());
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (a.algebra_ptr() != b.algebra_ptr() && a.algebra().dim() != b.algebra().dim())
    throw DomainError(ErrorKind::DimensionMismatch, "direct_sum", "summands belong to different algebras");
  const std::size_t n = a.dim() + b.dim();
  std::vector<Matrix> m;
  for (std::size_t i = 0; i < a.algebra().dim(); ++i) {
    Matrix x(n, n);
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t c = 0; c < a.dim(); ++c) x(r, c) = a.matrix(i)(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
      for (std::size_t c = 0; c < b.dim(); ++c) x(a.dim() + r, a.dim() + c) = b.matrix(i)(r, c);
    m.push_back(std::move(x));
  }
  std::optional<std::vector<Degree>> grading;
  if (a.grading() && b.grading()) {
    grading = *a.grading();
    grading->insert(grading->end(), b.grading()->begin(), b.grading()->end());
  }
  Representation out(a.algebra_ptr(), std::move(m), std::move(grading));
  if (a.uses_tensor_convention() || b.uses_tensor_convention()) out.mark_tensor_convention();
  return out;
}

Representation tensor_product(const Representation& a, const Representation& b) {
  if (!a.grading())
    throw DomainError(ErrorKind::UngradedFirstFactor, "tensor_product",
                      "the sign on the second factor needs the degrees of the first");
  if (a.algebra().dim() != b.algebra().dim())
    throw DomainError(ErrorKind::DimensionMismatch, "tensor_product", "factors belong to different algebras");
  const std::size_t n1 = a.dim(), n2 = b.dim(), n = n1 * n2;
  const auto& g1 = *a.grading();
  std::vector<Matrix> m;
  for (std::size_t k = 0; k < a.algebra().dim(); ++k) {
    const Degree d = a.algebra().degree(k);
    const Matrix& x1 = a.matrix(k);
    const Matrix& x2 = b.matrix(k);
    Matrix x(n, n);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t i2 = 0; i2 < n1; ++i2) {
        const Scalar& v = x1(i, i2);
        if (v.is_zero()) continue;
        for (std::size_t j = 0; j < n2; ++j) x(i * n2 + j, i2 * n2 + j) += v;
      }
    for (std::size_t i = 0; i < n1; ++i) {
      const int s = sign(d, g1[i]);
      for (std::size_t j = 0; j < n2; ++j)
        for (std::size_t j2 = 0; j2 < n2; ++j2) {
          const Scalar& v = x2(j, j2);
          if (v.is_zero()) continue;
          if (s > 0)
            x(i * n2 + j, i * n2 + j2) += v;
          else
            x(i * n2 + j, i * n2 + j2) -= v;
        }
    }
    m.push_back(std::move(x));
  }
  std::optional<std::vector<Degree>> grading;
  if (b.grading()) {
    grading.emplace();
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) grading->push_back(g1[i] + (*b.grading())[j]);
  }
  Representation out(a.algebra_ptr(), std::move(m), std::move(grading));
  out.mark_tensor_convention();
  return out;
}

RepresentationReport is_representation(const Representation& rep) {
  RepresentationReport report;
  const GradedAlgebra& g = rep.algebra();
  for (std::size_t i = 0; i < g.dim() && report.homomorphism; ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      Matrix lhs(rep.dim(), rep.dim());
      for (const auto& [k, c] : g.structure(i, j)) lhs.add_scaled(c, rep.matrix(k));
      Matrix rhs = graded_commutator(rep.matrix(i), rep.matrix(j), sign(g.degree(i), g.degree(j)));
      if (!(lhs == rhs)) {
        report.homomorphism = false;
        report.witness = {i, j};
        report.detail = "pi([" + g.label(i) + "," + g.label(j) + "]) differs from the graded commutator";
        report.lhs = std::move(lhs);
        report.rhs = std::move(rhs);
        break;
      }
    }
  if (rep.grading()) {
    const auto& gr = *rep.grading();
    for (std::size_t i = 0; i < g.dim() && report.graded; ++i) {
      const Matrix& m = rep.matrix(i);
      for (std::size_t r = 0; r < rep.dim() && report.graded; ++r)
        for (std::size_t c = 0; c < rep.dim(); ++c)
          if (!m(r, c).is_zero() && gr[r] != g.degree(i) + gr[c]) {
            report.graded = false;
            std::string msg = g.label(i) + " sends basis vector " + std::to_string(c) + " of degree " +
                              gr[c].to_string() + " to vector " + std::to_string(r) + " of degree " +
                              gr[r].to_string();
            report.detail = report.detail.empty() ? msg : report.detail + "; " + msg;
            break;
          }
    }
  }
  return report;
}

Matrix casimir_matrix(const Representation& rep) {
  const GradedAlgebra& g = rep.algebra();
  auto ginv = inverse(killing_form(g).gram);
  if (!ginv) throw DomainError(ErrorKind::SingularForm, "casimir_matrix", "Killing form is degenerate");
  Matrix omega(rep.dim(), rep.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Matrix dual(rep.dim(), rep.dim());
    bool any = false;
    for (std::size_t k = 0; k < g.dim(); ++k)
      if (!(*ginv)(k, i).is_zero()) {
        dual.add_scaled((*ginv)(k, i), rep.matrix(k));
        any = true;
      }
    if (any) omega += rep.matrix(i) * dual;
  }
  return omega;
}

bool casimir_is_central(const Representation& rep, const Matrix& omega) {
  for (const auto& m : rep.matrices())
    if (!(m * omega == omega * m)) return false;
  return true;
}

std::optional<std::size_t> WeightDecomposition::find(const Vector& weight) const {
  for (std::size_t k = 0; k < spaces.size(); ++k)
    if (spaces[k].weight == weight) return k;
  return std::nullopt;
}

namespace {

Rational real_part_or_none(const Scalar& s, bool& ok) {
  if (!s.is_real()) ok = false;
  return s.re();
}

std::optional<Rational> pairing_number(const RootSystem& rs, const Vector& mu, const Vector& alpha) {
  Scalar v = Scalar(2) * rs.inner(mu, alpha) / rs.inner(alpha, alpha);
  if (!v.is_real() || v.re().get_den() != 1) return std::nullopt;
  return v.re();
}

// V_mu split into its intersections with the degree pieces of V.
std::vector<std::vector<Vector>> homogeneous_pieces(const std::vector<Vector>& basis,
                                                    const std::vector<Degree>& grading) {
  std::vector<std::vector<Vector>> out;
  for (Degree d : kAllDegrees) {
    IncrementalSpan span(grading.size());
    std::vector<Vector> piece;
    for (const auto& v : basis) {
      Vector p = v;
      for (std::size_t r = 0; r < p.size(); ++r)
        if (grading[r] != d) p[r] = Scalar();
      if (!is_zero(p) && span.insert(p)) piece.push_back(std::move(p));
    }
    if (!piece.empty()) out.push_back(std::move(piece));
  }
  return out;
}

std::optional<Degree> vector_degree(const Vector& v, const std::vector<Degree>& grading) {
  std::optional<Degree> d;
  for (std::size_t r = 0; r < v.size(); ++r) {
    if (v[r].is_zero()) continue;
    if (d && *d != grading[r]) return std::nullopt;
    d = grading[r];
  }
  return d;
}

struct RootVectorOp {
  std::size_t root;
  Matrix matrix;
};

std::vector<RootVectorOp> root_vector_ops(const Representation& rep, const RootSystem& rs, bool positive) {
  std::vector<RootVectorOp> out;
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    if (rs.is_positive(k) != positive) continue;
    for (const auto& [d, vs] : rs.roots[k].spaces)
      for (const auto& v : vs) out.push_back({k, rep.act(v)});
  }
  return out;
}

struct VectorLess {
  bool operator()(const Vector& a, const Vector& b) const { return lex_less(a, b); }
};

}  // namespace

bool is_integral(const RootSystem& rs, const Vector& mu) {
  return std::all_of(rs.roots.begin(), rs.roots.end(),
                     [&](const RootDatum& r) { return pairing_number(rs, mu, r.alpha).has_value(); });
}

bool is_dominant(const RootSystem& rs, const Vector& mu) {
  for (auto k : rs.positive) {
    auto n = pairing_number(rs, mu, rs.roots[k].alpha);
    if (!n || sgn(*n) < 0) return false;
  }
  return true;
}

WeightDecomposition weight_decomposition(const Representation& rep, const RootSystem& rs) {
  std::vector<Matrix> ops;
  for (const auto& h : rs.cartan.basis) ops.push_back(rep.act(h));
  std::vector<Vector> start;
  for (std::size_t k = 0; k < rep.dim(); ++k) start.push_back(unit_vector(rep.dim(), k));
  auto spaces = joint_eigenspaces(ops, start, "weight_decomposition");
  WeightDecomposition wd;
  for (auto& sp : spaces) {
    Vector mu(sp.eigenvalues.begin(), sp.eigenvalues.end());
    if (!is_integral(rs, mu))
      throw DomainError(ErrorKind::NonIntegralWeight, "weight_decomposition",
                        "weight " + vector_string(mu) + " pairs non-integrally with a coroot");
    WeightSpace ws{std::move(mu), {}};
    if (rep.grading()) {
      for (auto& piece : homogeneous_pieces(sp.basis, *rep.grading()))
        for (auto& v : piece) ws.basis.push_back(std::move(v));
      bool eigen = ws.basis.size() == sp.basis.size();
      for (std::size_t k = 0; k < ops.size() && eigen; ++k)
        for (const auto& v : ws.basis)
          if (!(ops[k] * v == ws.weight[k] * v)) eigen = false;
      if (!eigen)
        throw DomainError(ErrorKind::PreconditionFailed, "weight_decomposition",
                          "weight space " + vector_string(ws.weight) + " is not graded");
    } else {
      ws.basis = std::move(sp.basis);
    }
    wd.spaces.push_back(std::move(ws));
  }
  return wd;
}

bool weights_weyl_invariant(const WeightDecomposition& wd, const RootSystem& rs) {
  for (const auto& r : rs.roots) {
    Scalar aa = rs.inner(r.alpha, r.alpha);
    for (const auto& sp : wd.spaces) {
      Scalar c = Scalar(2) * rs.inner(sp.weight, r.alpha) / aa;
      Vector image = sp.weight - c * r.alpha;
      auto k = wd.find(image);
      if (!k || wd.spaces[*k].basis.size() != sp.basis.size()) return false;
    }
  }
  return true;
}

std::vector<WeightSpace> highest_weight_vectors(const Representation& rep, const RootSystem& rs,
                                                const WeightDecomposition& wd) {
  auto raising = root_vector_ops(rep, rs, true);
  std::vector<WeightSpace> out;
  for (const auto& sp : wd.spaces) {
    std::vector<std::vector<Vector>> groups;
    if (rep.grading())
      groups = homogeneous_pieces(sp.basis, *rep.grading());
    else
      groups.push_back(sp.basis);
    WeightSpace hw{sp.weight, {}};
    for (const auto& group : groups) {
      const std::size_t d = group.size();
      std::vector<Vector> rows;
      for (const auto& op : raising) {
        std::vector<Vector> images;
        for (const auto& v : group) images.push_back(op.matrix * v);
        for (std::size_t r = 0; r < rep.dim(); ++r) {
          Vector row(d);
          bool nonzero = false;
          for (std::size_t s = 0; s < d; ++s) {
            row[s] = images[s][r];
            nonzero = nonzero || !row[s].is_zero();
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      std::vector<Vector> kern;
      if (rows.empty()) {
        for (std::size_t s = 0; s < d; ++s) kern.push_back(unit_vector(d, s));
      } else {
        kern = kernel(Matrix::from_rows(rows, d));
      }
      for (const auto& c : kern) {
        Vector v = zero_vector(rep.dim());
        for (std::size_t s = 0; s < d; ++s)
          if (!c[s].is_zero()) axpy(v, c[s], group[s]);
        hw.basis.push_back(std::move(v));
      }
    }
    if (hw.basis.empty()) continue;
    if (!is_dominant(rs, hw.weight))
      throw DomainError(ErrorKind::PreconditionFailed, "highest_weight_vectors",
                        "highest weight " + vector_string(hw.weight) + " is not dominant integral");
    out.push_back(std::move(hw));
  }
  return out;
}

Scalar casimir_eigenvalue_formula(const RootSystem& rs, const Vector& lambda) {
  return rs.inner(lambda, lambda) + Scalar(2) * rs.inner(lambda, rs.rho);
}

std::vector<IrreducibleComponent> decompose(const Representation& rep, const RootSystem& rs) {
  if (!is_self_centralizing(rs))
    throw DomainError(ErrorKind::NotSelfCentralizing, "decompose",
                      "weight-zero vectors outside the Cartan subalgebra are not covered by root vectors");
  auto fail = [](const std::string& detail) {
    throw DomainError(ErrorKind::DecompositionIncomplete, "decompose", detail);
  };
  const std::size_t n = rep.dim();
  auto wd = weight_decomposition(rep, rs);
  auto hws = highest_weight_vectors(rep, rs, wd);
  auto lowering = root_vector_ops(rep, rs, false);
  auto raising = root_vector_ops(rep, rs, true);
  Matrix omega = casimir_matrix(rep);

  std::vector<IrreducibleComponent> out;
  for (const auto& hw : hws)
    for (const auto& v : hw.basis) {
      IrreducibleComponent comp;
      comp.highest_weight = hw.weight;
      std::map<Vector, IncrementalSpan, VectorLess> spans;
      auto add = [&](Vector w, const Vector& mu) {
        auto it = spans.try_emplace(mu, n).first;
        if (!it->second.insert(w)) return false;
        comp.basis.push_back(std::move(w));
        comp.weights.push_back(mu);
        return true;
      };
      add(v, hw.weight);
      for (std::size_t head = 0; head < comp.basis.size(); ++head)
        for (const auto& op : lowering) {
          Vector u = op.matrix * comp.basis[head];
          if (is_zero(u)) continue;
          add(std::move(u), comp.weights[head] + rs.roots[op.root].alpha);
        }

      SpanSolver solver(comp.basis);
      for (std::size_t i = 0; i < rep.algebra().dim(); ++i)
        for (const auto& b : comp.basis)
          if (!solver.contains(rep.matrix(i) * b))
            fail("component with highest weight " + vector_string(hw.weight) + " is not invariant under " +
                 rep.algebra().label(i));

      const std::size_t d = comp.basis.size();
      // Rows of the stacked restriction of the raising operators.
      std::vector<Vector> rows;
      for (const auto& op : raising) {
        std::vector<Vector> cols;
        for (const auto& b : comp.basis) cols.push_back(*solver.coordinates(op.matrix * b));
        for (std::size_t r = 0; r < d; ++r) {
          Vector row(d);
          bool nonzero = false;
          for (std::size_t s = 0; s < d; ++s) {
            row[s] = cols[s][r];
            nonzero = nonzero || !row[s].is_zero();
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
      comp.highest_weight_dim = rows.empty() ? d : kernel(Matrix::from_rows(rows, d)).size();
      if (comp.highest_weight_dim != 1)
        fail("component with highest weight " + vector_string(hw.weight) + " has " +
             std::to_string(comp.highest_weight_dim) + " independent highest-weight vectors");

      Vector ov = omega * v;
      std::size_t pivot = 0;
      while (v[pivot].is_zero()) ++pivot;
      comp.casimir_value = ov[pivot] / v[pivot];
      for (const auto& b : comp.basis)
        if (!(omega * b == comp.casimir_value * b))
          fail("Casimir is not scalar on the component with highest weight " + vector_string(hw.weight));
      comp.casimir_formula = casimir_eigenvalue_formula(rs, hw.weight);

      if (rep.grading()) {
        comp.highest_weight_degree = vector_degree(v, *rep.grading());
        for (const auto& b : comp.basis)
          if (!vector_degree(b, *rep.grading()))
            fail("component with highest weight " + vector_string(hw.weight) + " has an inhomogeneous basis vector");
      }
      out.push_back(std::move(comp));
    }

  std::size_t total = 0;
  std::vector<Vector> all;
  for (const auto& c : out) {
    total += c.basis.size();
    all.insert(all.end(), c.basis.begin(), c.basis.end());
  }
  if (total != n || rank(std::span<const Vector>(all)) != n)
    fail("components span dimension " + std::to_string(rank(std::span<const Vector>(all))) + " with total " +
         std::to_string(total) + " in a module of dimension " + std::to_string(n));
  std::stable_sort(out.begin(), out.end(), [](const IrreducibleComponent& a, const IrreducibleComponent& b) {
    return lex_less(b.highest_weight, a.highest_weight);
  });
  return out;
}

Representation change_basis(const Representation& rep, const Matrix& p, std::optional<std::vector<Degree>> grading) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < p.cols(); ++c) cols.push_back(p.column(c));
  if (p.rows() != rep.dim() || p.cols() != rep.dim())
    throw DomainError(ErrorKind::DimensionMismatch, "change_basis", "basis matrix has the wrong shape");
  SpanSolver solver(cols);
  std::vector<Matrix> m;
  for (const auto& x : rep.matrices()) {
    std::vector<Vector> images;
    for (const auto& c : cols) images.push_back(*solver.coordinates(x * c));
    m.push_back(Matrix::from_columns(images, rep.dim()));
  }
  Representation out(rep.algebra_ptr(), std::move(m), std::move(grading));
  if (rep.uses_tensor_convention()) out.mark_tensor_convention();
  return out;
}

GradingSynthesis grading_synthesis(const Representation& rep, const RootSystem& rs) {
  if (!is_self_centralizing(rs))
    throw DomainError(ErrorKind::NotSelfCentralizing, "grading_synthesis", "root spaces need a single degree");
  GradingSynthesis out;
  out.weights = weight_decomposition(rep, rs);
  std::vector<Vector> simple_alpha;
  std::vector<Degree> simple_degree;
  for (auto s : rs.simple) {
    simple_alpha.push_back(rs.roots[s].alpha);
    simple_degree.push_back(root_degree(rs, s));
  }
  SpanSolver solver(simple_alpha);
  auto coords = [&](const Vector& diff) {
    auto c = solver.coordinates(diff);
    if (!c)
      throw DomainError(ErrorKind::LatticeSolveFailed, "grading_synthesis",
                        "weight difference " + vector_string(diff) + " is outside the span of the simple roots");
    std::vector<Rational> q;
    bool ok = true;
    for (const auto& x : *c) q.push_back(real_part_or_none(x, ok));
    if (!ok)
      throw DomainError(ErrorKind::LatticeSolveFailed, "grading_synthesis",
                        "weight difference " + vector_string(diff) + " has non-real simple-root coordinates");
    return q;
  };
  auto integral = [](const std::vector<Rational>& q) {
    return std::all_of(q.begin(), q.end(), [](const Rational& x) { return x.get_den() == 1; });
  };
  // Height first, then lexicographic in the simple-root coordinates.
  auto greater = [](const std::vector<Rational>& q) {
    Rational h = 0;
    for (const auto& x : q) h += x;
    if (sgn(h) != 0) return sgn(h) > 0;
    for (const auto& x : q)
      if (sgn(x) != 0) return sgn(x) > 0;
    return false;
  };

  const auto& spaces = out.weights.spaces;
  out.coset.assign(spaces.size(), 0);
  std::vector<Vector> reps;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size() && !placed; ++c)
      if (integral(coords(spaces[k].weight - reps[c]))) {
        out.coset[k] = c;
        placed = true;
        if (greater(coords(spaces[k].weight - out.coset_base[c]))) out.coset_base[c] = spaces[k].weight;
      }
    if (!placed) {
      out.coset[k] = reps.size();
      reps.push_back(spaces[k].weight);
      out.coset_base.push_back(spaces[k].weight);
    }
  }

  std::vector<Vector> columns;
  for (std::size_t k = 0; k < spaces.size(); ++k) {
    auto q = coords(spaces[k].weight - out.coset_base[out.coset[k]]);
    if (!integral(q))
      throw DomainError(ErrorKind::LatticeSolveFailed, "grading_synthesis",
                        "weight " + vector_string(spaces[k].weight) + " is not in the lattice coset of its base");
    Degree d;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (mpz_odd_p(q[i].get_num_mpz_t())) d += simple_degree[i];
    out.weight_degrees.push_back(d);
    for (const auto& v : spaces[k].basis) {
      columns.push_back(v);
      out.vector_degrees.push_back(d);
    }
  }
  out.basis = Matrix::from_columns(columns, rep.dim());
  Representation graded = change_basis(rep, out.basis, out.vector_degrees);
  auto report = is_representation(graded);
  if (!report.graded)
    throw DomainError(ErrorKind::PreconditionFailed, "grading_synthesis",
                      "synthesized degrees violate the module grading: " + report.detail);
  out.graded = std::move(graded);
  return out;
}

}  // namespace colorlie
