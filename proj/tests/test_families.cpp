#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "colorlie/errors.hpp"
#include "support.hpp"

using namespace colorlie;

TEST_CASE("so(p,q,r,s) has the dimension of so(p+q+r+s) and is a graded Lie algebra") {
  for (SoParams p : {SoParams{4, 2, 2, 2}, SoParams{4, 2, 1, 1}, SoParams{2, 1, 1, 1}, SoParams{0, 3, 0, 2},
                     SoParams{1, 1, 0, 0}, SoParams{4, 4, 2, 0}}) {
    auto real = so_pqrs(p);
    std::size_t n = p.p + p.q + p.r + p.s;
    CHECK(real.matrices.size() == n * (n - 1) / 2);
    GradedAlgebra g = from_matrices(real);
    CHECK(check_axioms(g).pass());
  }
  CHECK_THROWS_AS(so_pqrs({1, 0, 0, 0}), DomainError);
}

TEST_CASE("so(4,2,2,2) and so(4,2,1,1) are basic") {
  CHECK(is_basic(from_matrices(so_pqrs({4, 2, 2, 2}))).basic);
  CHECK(is_basic(from_matrices(so_pqrs({4, 2, 1, 1}))).basic);
}

TEST_CASE("so(n,0,0,0) brackets as ordinary so(n)") {
  auto real = so_pqrs({5, 0, 0, 0});
  GradedAlgebra g = from_matrices(real);
  for (auto d : g.degrees()) CHECK(d == Degree(0, 0));
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Matrix ordinary = real.matrices[i] * real.matrices[j] - real.matrices[j] * real.matrices[i];
      CHECK(real.expand(g.basis_bracket(i, j)) == ordinary);
    }
}

TEST_CASE("block sign conventions") {
  auto real = so_pqrs({2, 1, 1, 0});
  // Entries (r, c) and (c, r) of every basis matrix: -1 mirror from the (0,0) block rows, +1 otherwise.
  for (std::size_t k = 0; k < real.matrices.size(); ++k) {
    const Matrix& m = real.matrices[k];
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = r + 1; c < 4; ++c) {
        if (m(r, c).is_zero()) continue;
        bool antisymmetric = real.block_of(r) == real.block_of(c) || real.block_of(r) == 0;
        CHECK(m(c, r) == (antisymmetric ? -m(r, c) : m(r, c)));
        CHECK(real.degrees[k] == real.entry_degree(r, c));
      }
  }
}

TEST_CASE("fixture matrices lie in the so(p,q,r,s) realization") {
  for (auto [fixture, params] : {std::pair{fixture_so4222(), SoParams{4, 2, 2, 2}},
                                 std::pair{fixture_so4211(), SoParams{4, 2, 1, 1}}}) {
    auto real = so_pqrs(params);
    CHECK(fixture.realization.matrices.size() == real.matrices.size());
    CHECK(fixture.realization.block_sizes == real.block_sizes);
    for (std::size_t k = 0; k < fixture.realization.matrices.size(); ++k) {
      auto c = realization_coordinates(real, fixture.realization.matrices[k]);
      REQUIRE(c);
      CHECK(real.expand(*c) == fixture.realization.matrices[k]);
    }
  }
}

TEST_CASE("fixture root vectors are eigenvectors with the labelled weights") {
  for (auto fixture : {fixture_so4222(), fixture_so4211()}) {
    GradedAlgebra g = from_matrices(fixture.realization);
    const std::size_t rank = fixture.cartan_hint.size();
    std::size_t index = rank;
    for (const auto& root : fixture.roots) {
      std::size_t count = 0;
      for (const auto& [d, dim] : root.dims) count += dim;
      for (std::size_t c = 0; c < count; ++c, ++index) {
        for (std::size_t h = 0; h < rank; ++h)
          CHECK(g.basis_bracket(h, index) == root.alpha[h] * unit_vector(g.dim(), index));
        CHECK(root.dims.count(g.degree(index)) == 1);
      }
    }
    CHECK(index + (fixture.self_centralizing ? 0 : 1) == g.dim());
  }
}

TEST_CASE("fixture degree examples") {
  auto f = fixture_so4222();
  auto degree_of = [&](const std::string& l) {
    auto& labels = f.realization.labels;
    auto it = std::find(labels.begin(), labels.end(), l);
    REQUIRE(it != labels.end());
    return f.realization.degrees[static_cast<std::size_t>(it - labels.begin())];
  };
  for (std::string s1 : {"", "-"})
    for (std::string s2 : {"+", "-"}) {
      CHECK(degree_of("E(" + s1 + "e4" + s2 + "e5)") == Degree(0, 1));
      CHECK(degree_of("E(" + s1 + "e2" + s2 + "e4)") == Degree(1, 0));
      CHECK(degree_of("E(" + s1 + "e1" + s2 + "e5)") == Degree(1, 1));
    }
  auto g = fixture_so4211();
  CHECK(g.realization.matrices.size() == 28);
  CHECK(!g.self_centralizing);
}

TEST_CASE("standard Cartan of so(4,2,1,1) is accepted as a hint") {
  SoParams p{4, 2, 1, 1};
  auto real = so_pqrs(p);
  GradedAlgebra g = from_matrices(real);
  CHECK(find_cartan(g, hint_coordinates(real, so_standard_cartan(p)), 0).basis.size() == 3);
  Matrix outside(8, 8);
  outside(0, 0) = Scalar(1);
  CHECK_THROWS_AS(hint_coordinates(real, {outside}), DomainError);
}
