#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/linalg.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;
using StructureTable = std::map<std::pair<std::size_t, std::size_t>, Vector>;

SparseVector to_sparse(const Vector& v);

/// Finite-dimensional Z2xZ2-graded algebra on a homogeneous basis e_0..e_{n-1}
/// with [e_i, e_j] = sum_k c_ij^k e_k.
///
/// The ordered table is kept in full. Pairs given only as (i, j) get their
/// (j, i) partner from graded antisymmetry; pairs given both ways are kept as
/// supplied so that check_axioms can see an inconsistency.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(std::vector<Degree> degrees, const StructureTable& table, std::vector<std::string> labels = {});

  static GradedAlgebra abelian(std::vector<Degree> degrees);

  std::size_t dim() const { return degrees_.size(); }
  const std::vector<Degree>& degrees() const { return degrees_; }
  Degree degree(std::size_t i) const { return degrees_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;

  /// [e_i, e_j] as a sparse coefficient list.
  const SparseVector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  /// ad(e_i), column j holding [e_i, e_j].
  const Matrix& ad(std::size_t i) const { return ad_[i]; }
  Matrix ad(const Vector& x) const;

  Vector bracket(const Vector& x, const Vector& y) const;
  Vector basis_bracket(std::size_t i, std::size_t j) const;

  std::vector<std::size_t> indices_of_degree(Degree d) const;
  /// Degree of x if x is nonzero and homogeneous.
  std::optional<Degree> homogeneous_degree(const Vector& x) const;
  bool is_abelian() const;

  /// Structure records (i, j, coefficients) for i < j, the interchange view.
  StructureTable upper_table() const;
  /// Copy with one coefficient replaced in the ordered table only; used to
  /// build corrupted inputs.
  GradedAlgebra with_entry(std::size_t i, std::size_t j, std::size_t k, const Scalar& value) const;

 private:
  void build(const StructureTable& table);

  std::vector<Degree> degrees_;
  std::vector<std::string> labels_;
  std::vector<SparseVector> table_;
  std::vector<Matrix> ad_;
};

/// Basis of a graded matrix Lie algebra inside gl(V). V is split into blocks;
/// block pair (I, J) carries a degree, and a homogeneous matrix of degree d
/// has nonzero entries only in blocks whose degree is d.
struct MatrixRealization {
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<Degree>> block_degrees;  // block pair -> degree
  std::vector<Matrix> matrices;
  std::vector<Degree> degrees;
  std::vector<std::string> labels;

  std::size_t ambient_dim() const;
  std::size_t block_of(std::size_t index) const;
  Degree entry_degree(std::size_t r, std::size_t c) const;
  /// Degrees of the coordinates of V when the block-pair degrees are of the
  /// form g_I + g_J, normalized so the first block has degree (0,0).
  std::optional<std::vector<Degree>> space_grading() const;
  /// sum_i c_i M_i
  Matrix expand(const Vector& coeffs) const;
};

/// Block-pair degrees g_I + g_J for a block grading g.
std::vector<std::vector<Degree>> additive_block_degrees(const std::vector<Degree>& block_grading);

/// Coordinates of m in the span of the realization's matrices.
std::optional<Vector> realization_coordinates(const MatrixRealization& real, const Matrix& m);

/// Structure constants from graded commutators xy - (-1)^{ab} yx.
/// Throws NotHomogeneous, LinearlyDependent or NotClosed.
GradedAlgebra from_matrices(const MatrixRealization& real);

/// All elementary matrices on a graded space with the given dimension per degree
/// (blocks in the order (0,0),(0,1),(1,0),(1,1), empty ones dropped).
MatrixRealization gl_graded(const std::map<Degree, std::size_t>& dims);

GradedAlgebra direct_sum(const GradedAlgebra& a, const GradedAlgebra& b);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<std::size_t> witness;  // basis indices of the first violation
  Vector lhs;
  Vector rhs;

  static AxiomCheck named_check(std::string name) {
    AxiomCheck c;
    c.axiom = std::move(name);
    return c;
  }
};

struct AxiomReport {
  AxiomCheck grading = AxiomCheck::named_check("grading closure");
  AxiomCheck antisymmetry = AxiomCheck::named_check("graded antisymmetry");
  AxiomCheck jacobi = AxiomCheck::named_check("graded Jacobi");
  bool pass() const { return grading.pass && antisymmetry.pass && jacobi.pass; }
};

AxiomReport check_axioms(const GradedAlgebra& g);

struct BilinearForm {
  Matrix gram;
};

/// K(x, y) = tr(ad x ad y) on the basis.
BilinearForm killing_form(const GradedAlgebra& g);
/// Kernel of the Killing Gram matrix.
std::vector<Vector> killing_radical(const GradedAlgebra& g);

struct BasicVerdict {
  bool basic = false;
  bool killing_nondegenerate = false;
  bool even_part_reductive = false;
  std::size_t radical_dim = 0;
  std::size_t even_center_dim = 0;
  std::size_t even_derived_dim = 0;
  std::string reason;
};

BasicVerdict is_basic(const GradedAlgebra& g);

struct SimplicityVerdict {
  bool probably_simple = false;
  std::vector<Vector> witness;  // basis of a proper nonzero graded ideal
  std::string reason;
};

/// Ideal generated by x under repeated brackets with the basis.
std::vector<Vector> ideal_closure(const GradedAlgebra& g, const Vector& x);

SimplicityVerdict graded_simplicity_probe(const GradedAlgebra& g, std::size_t trials, std::uint64_t seed);

}  // namespace colorlie
