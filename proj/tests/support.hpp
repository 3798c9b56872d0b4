#pragma once

#include <memory>

#include "colorlie/algebra.hpp"
#include "colorlie/families.hpp"
#include "colorlie/representation.hpp"
#include "colorlie/roots.hpp"

namespace testing {

using namespace colorlie;

struct Golden {
  Fixture fixture;
  std::shared_ptr<const GradedAlgebra> algebra;
  RootSystem roots;
};

inline Golden make_golden(Fixture f) {
  Golden g{std::move(f), nullptr, {}};
  g.algebra = std::make_shared<const GradedAlgebra>(from_matrices(g.fixture.realization));
  g.roots = root_decomposition(*g.algebra, find_cartan(*g.algebra, g.fixture.cartan_hint, 0));
  return g;
}

inline const Golden& so4222() {
  static const Golden g = make_golden(fixture_so4222());
  return g;
}

inline const Golden& so4211() {
  static const Golden g = make_golden(fixture_so4211());
  return g;
}

inline Vector rational_vector(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(x));
  return v;
}

/// Half the sum of the positive roots, recomputed on the test side.
inline Vector half_sum_positive(const RootSystem& rs) {
  Vector rho = zero_vector(rs.rank());
  for (auto k : rs.positive) rho = rho + rs.roots[k].alpha;
  return Scalar(Rational(1, 2)) * rho;
}

/// <a,b> through the inverse Gram matrix of the Cartan basis, without RootSystem::inner.
inline Scalar form(const RootSystem& rs, const Vector& a, const Vector& b) {
  Scalar out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out += a[i] * rs.cartan.gram_inverse(i, j) * b[j];
  return out;
}

}  // namespace testing
