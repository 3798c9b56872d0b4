#include <algorithm>
#include <string>

#include "colorlie/errors.hpp"
#include "colorlie/linalg.hpp"
#include "colorlie/polynomial.hpp"

namespace colorlie {

namespace {

struct Block {
  std::vector<Scalar> eigenvalues;
  std::vector<Vector> basis;  // coordinates in the start basis
};

bool is_scalar_matrix(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r == c ? m(r, c) != m(0, 0) : !m(r, c).is_zero()) return false;
    }
  return true;
}

// Matrix of op on span(cols), given op's images are expressible in that span.
Matrix restrict_to(const Matrix& op, const std::vector<Vector>& cols, const char* operation, const char* what) {
  SpanSolver solver(cols);
  Matrix out(cols.size(), cols.size());
  for (std::size_t s = 0; s < cols.size(); ++s) {
    auto c = solver.coordinates(op * cols[s]);
    if (!c) throw DomainError(ErrorKind::PreconditionFailed, operation, what);
    for (std::size_t t = 0; t < cols.size(); ++t) out(t, s) = (*c)[t];
  }
  return out;
}

}  // namespace

std::vector<JointEigenspace> joint_eigenspaces(std::span<const Matrix> ops, std::span<const Vector> start,
                                               const char* operation) {
  std::vector<Vector> base;
  {
    std::size_t ambient = start.empty() ? 0 : start.front().size();
    IncrementalSpan span(ambient);
    for (const auto& v : start)
      if (span.insert(v)) base.push_back(v);
  }
  if (base.empty()) return {};
  const std::size_t d = base.size();

  std::vector<Matrix> restricted;
  restricted.reserve(ops.size());
  for (const auto& op : ops) restricted.push_back(restrict_to(op, base, operation, "start space is not invariant"));

  std::vector<Block> blocks(1);
  for (std::size_t k = 0; k < d; ++k) blocks[0].basis.push_back(unit_vector(d, k));

  for (std::size_t i = 0; i < restricted.size(); ++i) {
    std::vector<Block> next;
    for (auto& block : blocks) {
      Matrix r = restrict_to(restricted[i], block.basis, operation, "operators do not commute");
      if (is_scalar_matrix(r)) {
        block.eigenvalues.push_back(r(0, 0));
        next.push_back(std::move(block));
        continue;
      }
      RootSearch roots = gaussian_rational_roots(characteristic_polynomial(r));
      if (!roots.complete)
        throw DomainError(ErrorKind::IrrationalEigenvalue, operation,
                          "operator " + std::to_string(i) + " has an eigenvalue outside Q(i)");
      std::size_t found = 0;
      for (const auto& lambda : roots.roots) {
        Matrix shifted = r;
        for (std::size_t k = 0; k < shifted.rows(); ++k) shifted(k, k) -= lambda;
        auto ker = kernel(shifted);
        found += ker.size();
        Block child;
        child.eigenvalues = block.eigenvalues;
        child.eigenvalues.push_back(lambda);
        for (const auto& c : ker) {
          Vector v = zero_vector(d);
          for (std::size_t s = 0; s < c.size(); ++s)
            if (!c[s].is_zero()) axpy(v, c[s], block.basis[s]);
          child.basis.push_back(std::move(v));
        }
        next.push_back(std::move(child));
      }
      if (found != block.basis.size())
        throw DomainError(ErrorKind::NonDiagonalizable, operation,
                          "operator " + std::to_string(i) + " is not diagonalizable");
    }
    blocks = std::move(next);
  }

  std::vector<JointEigenspace> out;
  out.reserve(blocks.size());
  const std::size_t ambient = base.front().size();
  for (auto& block : blocks) {
    JointEigenspace e;
    e.eigenvalues = std::move(block.eigenvalues);
    for (const auto& c : block.basis) {
      Vector v = zero_vector(ambient);
      for (std::size_t t = 0; t < d; ++t)
        if (!c[t].is_zero()) axpy(v, c[t], base[t]);
      e.basis.push_back(std::move(v));
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const JointEigenspace& a, const JointEigenspace& b) {
    return lex_less(b.eigenvalues, a.eigenvalues);
  });
  return out;
}

}  // namespace colorlie
