#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "colorlie/errors.hpp"
#include "support.hpp"

using namespace colorlie;
using testing::rational_vector;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("no DomainError raised");
  return ErrorKind::InvalidArgument;
}

// ±e_i ± e_j in R^5 (1-based indices).
Vector eps(std::size_t rank, std::initializer_list<std::pair<std::size_t, int>> terms) {
  Vector v = zero_vector(rank);
  for (auto [i, s] : terms) v[i - 1] += Scalar(s);
  return v;
}

std::size_t root_index(const RootSystem& rs, const Vector& alpha) {
  auto k = rs.find(alpha);
  REQUIRE(k);
  return *k;
}

std::size_t label_index(const GradedAlgebra& g, const std::string& l) {
  auto it = std::find(g.labels().begin(), g.labels().end(), l);
  REQUIRE(it != g.labels().end());
  return static_cast<std::size_t>(it - g.labels().begin());
}

struct Small {
  std::shared_ptr<const GradedAlgebra> g;
  RootSystem rs;
};

Small standard(const SoParams& p) {
  auto real = so_pqrs(p);
  Small s;
  s.g = std::make_shared<const GradedAlgebra>(from_matrices(real));
  s.rs = root_decomposition(*s.g, find_cartan(*s.g, hint_coordinates(real, so_standard_cartan(p)), 0));
  return s;
}

}  // namespace

TEST_CASE("so(4,2,2,2) root system") {
  const auto& rs = testing::so4222().roots;
  CHECK(rs.rank() == 5);
  CHECK(rs.roots.size() == 40);
  CHECK(is_self_centralizing(rs));
  for (std::size_t i = 1; i <= 5; ++i)
    for (std::size_t j = i + 1; j <= 5; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          auto k = rs.find(eps(5, {{i, s1}, {j, s2}}));
          REQUIRE(k);
          CHECK(rs.roots[*k].multiplicity() == 1);
        }
  CHECK(rs.positive.size() == 20);
  std::vector<Vector> expected_simple{eps(5, {{1, 1}, {2, -1}}), eps(5, {{2, 1}, {3, -1}}), eps(5, {{3, 1}, {4, -1}}),
                                      eps(5, {{4, 1}, {5, -1}}), eps(5, {{4, 1}, {5, 1}})};
  std::vector<Vector> simple;
  for (auto s : rs.simple) simple.push_back(rs.roots[s].alpha);
  std::sort(simple.begin(), simple.end(), lex_less);
  std::sort(expected_simple.begin(), expected_simple.end(), lex_less);
  CHECK(simple == expected_simple);
}

TEST_CASE("root degree table of so(4,2,2,2)") {
  const auto& rs = testing::so4222().roots;
  // Pairs (i,j) listed per degree.
  const std::vector<std::pair<Degree, std::vector<std::pair<std::size_t, std::size_t>>>> table = {
      {Degree(0, 0), {{1, 2}}},
      {Degree(0, 1), {{1, 3}, {2, 3}, {4, 5}}},
      {Degree(1, 0), {{1, 4}, {2, 4}, {3, 5}}},
      {Degree(1, 1), {{1, 5}, {2, 5}, {3, 4}}},
  };
  std::size_t seen = 0;
  for (const auto& [d, pairs] : table)
    for (auto [i, j] : pairs)
      for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
          CHECK(root_degree(rs, root_index(rs, eps(5, {{i, s1}, {j, s2}}))) == d);
          ++seen;
        }
  CHECK(seen == 40);
}

TEST_CASE("so(4,2,1,1) root system") {
  const auto& rs = testing::so4211().roots;
  CHECK(rs.rank() == 3);
  CHECK(rs.roots.size() == 18);
  CHECK(!is_self_centralizing(rs));
  for (std::size_t i = 1; i <= 3; ++i)
    for (int s : {1, -1}) {
      const auto& r = rs.roots[root_index(rs, eps(3, {{i, s}}))];
      CHECK(r.multiplicity() == 2);
      REQUIRE(r.spaces.count(Degree(1, 0)) == 1);
      REQUIRE(r.spaces.count(Degree(1, 1)) == 1);
      CHECK(r.spaces.at(Degree(1, 0)).size() == 1);
      CHECK(r.spaces.at(Degree(1, 1)).size() == 1);
      CHECK(kind_of([&] { root_degree(rs, root_index(rs, eps(3, {{i, s}}))); }) == ErrorKind::MultiDegreeRoot);
    }
  std::size_t zero_dim = 0;
  for (const auto& [d, vs] : rs.zero_part) {
    if (vs.empty()) continue;
    CHECK(d == Degree(0, 1));
    zero_dim += vs.size();
  }
  CHECK(zero_dim == 1);
  // E0 is annihilated by the Cartan.
  const auto& g = *testing::so4211().algebra;
  std::size_t e0 = label_index(g, "E0");
  for (const auto& h : rs.cartan.basis) CHECK(is_zero(g.bracket(h, unit_vector(g.dim(), e0))));
  CHECK(kind_of([&] { enhanced_dynkin(rs); }) == ErrorKind::NotSelfCentralizing);
}

TEST_CASE("structural identities hold on both fixtures") {
  for (const auto* golden : {&testing::so4222(), &testing::so4211()}) {
    for (const auto& c : verify_root_system(*golden->algebra, golden->roots)) {
      INFO(c.name << ": " << c.detail);
      CHECK(c.pass);
    }
    CHECK(sl2_generated_dimension(*golden->algebra, golden->roots) == golden->algebra->dim());
  }
}

TEST_CASE("Cartan hints are validated in order") {
  const auto& g = *testing::so4222().algebra;
  const std::size_t n = g.dim();
  auto h = [&](std::size_t k) { return unit_vector(n, k); };
  CHECK(find_cartan(g, std::vector<Vector>{h(0), h(1), h(2), h(3), h(4)}, 0).basis.size() == 5);
  auto invalid = [&](std::vector<Vector> hint) { return kind_of([&] { validate_cartan(g, hint); }); };
  CHECK(invalid({h(0)}) == ErrorKind::HintInvalid);
  CHECK(invalid({h(0), h(0)}) == ErrorKind::HintInvalid);
  CHECK(invalid({unit_vector(n, label_index(g, "E(e1+e3)"))}) == ErrorKind::HintInvalid);
  CHECK(invalid({unit_vector(n, label_index(g, "E(e1-e2)"))}) == ErrorKind::HintInvalid);
  CHECK(invalid({h(0), unit_vector(n, label_index(g, "E(e1-e2)"))}) == ErrorKind::HintInvalid);
  const auto& g2 = *testing::so4211().algebra;
  CHECK(find_cartan(g2, testing::so4211().fixture.cartan_hint, 0).basis.size() == 3);
}

TEST_CASE("automatic Cartan search") {
  const auto& g = *testing::so4222().algebra;
  CartanSubalgebra t = find_cartan(g, std::nullopt, 42);
  CHECK(t.basis.size() == 5);
  RootSystem rs = root_decomposition(g, t);
  CHECK(rs.roots.size() == 40);
  CHECK(is_self_centralizing(rs));
  CHECK(enhanced_dynkin(rs).type == "D5");
  CartanSubalgebra again = find_cartan(g, std::nullopt, 42);
  CHECK(again.basis == t.basis);
  CHECK(kind_of([&] { find_cartan(g, std::nullopt, 0, 0); }) == ErrorKind::AutoSearchFailed);
}

TEST_CASE("root system axioms") {
  const auto& rs = testing::so4222().roots;
  for (std::size_t a = 0; a < rs.roots.size(); ++a) {
    CHECK(rs.find(Scalar(-1) * rs.roots[a].alpha));
    Scalar aa = rs.inner(rs.roots[a].alpha, rs.roots[a].alpha);
    CHECK(aa.is_real());
    CHECK(sgn(aa.re()) > 0);
    CHECK(aa == testing::form(rs, rs.roots[a].alpha, rs.roots[a].alpha));
    for (std::size_t b = 0; b < rs.roots.size(); ++b) {
      CHECK(cartan_number(rs, b, a).get_den() == 1);
      CHECK(rs.find(rs.roots[b].alpha - Scalar(cartan_number(rs, b, a)) * rs.roots[a].alpha));
    }
  }
  for (auto s : rs.simple) CHECK(sgn(rs.inner(rs.roots[s].alpha, rs.rho).re()) > 0);
  CHECK(rs.rho == testing::half_sum_positive(rs));
  Vector a = eps(5, {{1, 1}, {2, -1}}), b = eps(5, {{2, 1}, {3, -1}});
  CHECK(sgn(rs.inner(a, b).re()) < 0);
  CHECK(Scalar(2) * rs.inner(a, b) / rs.inner(b, b) == Scalar(-1));
  CHECK(is_zero(killing_dual(rs.cartan, zero_vector(5))));
}

TEST_CASE("root string examples") {
  const auto& rs = testing::so4222().roots;
  auto idx = [&](std::initializer_list<std::pair<std::size_t, int>> t) { return root_index(rs, eps(5, t)); };
  std::size_t beta = idx({{1, 1}, {2, -1}}), alpha = idx({{2, 1}, {3, -1}});
  RootString s = root_string(rs, beta, alpha);
  CHECK(s.p == 0);
  CHECK(s.q == 1);
  CHECK(cartan_number(rs, beta, alpha) == -1);
  RootString self = root_string(rs, alpha, alpha);
  CHECK(self.p == 2);
  CHECK(self.q == 0);
  RootString orth = root_string(rs, idx({{1, 1}, {2, 1}}), idx({{3, 1}, {4, -1}}));
  CHECK(orth.p == 0);
  CHECK(orth.q == 0);
}

TEST_CASE("sl2 triplets") {
  const auto& golden = testing::so4222();
  const auto& g = *golden.algebra;
  const auto& rs = golden.roots;
  auto check = [&](const Sl2Triplet& t) {
    CHECK(g.bracket(t.h, t.x) == Scalar(2) * t.x);
    CHECK(g.bracket(t.h, t.y) == Scalar(-2) * t.y);
    CHECK(g.bracket(t.x, t.y) == t.h);
  };
  std::size_t a12 = root_index(rs, eps(5, {{1, 1}, {2, -1}}));
  check(sl2_triplet(g, rs, a12, Degree(0, 0)));
  check(sl2_triplet(g, rs, root_index(rs, eps(5, {{1, 1}, {3, -1}})), Degree(0, 1)));
  CHECK(kind_of([&] { sl2_triplet(g, rs, a12, Degree(1, 1)); }) == ErrorKind::PreconditionFailed);
  auto all = all_sl2_triplets(g, rs);
  CHECK(all.size() == 40);
  for (const auto& t : all) check(t);
}

TEST_CASE("Weyl group of D5") {
  const auto& rs = testing::so4222().roots;
  WeylGroup w = weyl_group(rs);
  std::size_t oracle = 16 * 120;  // 2^(n-1) n! for D_n, n = 5
  CHECK(w.order() == oracle);
  CHECK(weyl_group_preserves_form(rs, w));
  for (std::size_t e = 0; e < w.order(); e += 97) {
    std::vector<std::uint16_t> sorted = w.elements[e];
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::uint16_t> iota(rs.roots.size());
    std::iota(iota.begin(), iota.end(), 0);
    CHECK(sorted == iota);
  }
}

TEST_CASE("rank one and ordinary algebras") {
  Small so3 = standard({3, 0, 0, 0});
  CHECK(so3.rs.roots.size() == 2);
  CHECK(weyl_group(so3.rs).order() == 2);
  REQUIRE(so3.rs.positive.size() == 1);
  CHECK(so3.rs.simple == so3.rs.positive);
  CHECK(so3.rs.rho == Scalar(Rational(1, 2)) * so3.rs.roots[so3.rs.positive[0]].alpha);
  Small so5 = standard({5, 0, 0, 0});
  CHECK(is_self_centralizing(so5.rs));
  CHECK(enhanced_dynkin(so5.rs).type == "B2");
  Small so8 = standard({8, 0, 0, 0});
  CHECK(enhanced_dynkin(so8.rs).type == "D4");
  CHECK(weyl_group(so8.rs).order() == 192);
}

TEST_CASE("an abelian Cartan acting on itself has no roots") {
  GradedAlgebra a = GradedAlgebra::abelian({Degree(0, 0), Degree(0, 0)});
  CartanSubalgebra t;
  t.basis = {unit_vector(2, 0), unit_vector(2, 1)};
  t.gram = Matrix::identity(2);
  t.gram_inverse = Matrix::identity(2);
  RootSystem rs = root_decomposition(a, t);
  CHECK(rs.roots.empty());
  CHECK(is_self_centralizing(rs));
}

TEST_CASE("degenerate and explicit orders") {
  RootSystem rs = testing::so4222().roots;
  CHECK(kind_of([&] { positive_and_simple(rs, RootOrder{rational_vector({1, 1, 0, 0, 0})}); }) ==
        ErrorKind::DegenerateOrder);
  positive_and_simple(rs, RootOrder{rational_vector({5, 4, 3, 2, 1})});
  CHECK(rs.positive.size() == 20);
  CHECK(rs.simple.size() == 5);
  CHECK(enhanced_dynkin(rs).type == "D5");
  positive_and_simple(rs, RootOrder{rational_vector({-5, 4, 3, 2, 1})});
  CHECK(rs.find(eps(5, {{1, -1}, {2, 1}})));
  CHECK(rs.is_positive(*rs.find(eps(5, {{1, -1}, {2, 1}}))));
}

TEST_CASE("degree additivity over positive roots") {
  const auto& rs = testing::so4222().roots;
  for (auto k : rs.positive) {
    Degree sum;
    for (std::size_t i = 0; i < rs.simple.size(); ++i) {
      long m = rs.simple_coords[k][i];
      CHECK(m >= 0);
      if (m % 2) sum += root_degree(rs, rs.simple[i]);
    }
    CHECK(sum == root_degree(rs, k));
    CHECK(root_degree(rs, k) == root_degree(rs, root_index(rs, Scalar(-1) * rs.roots[k].alpha)));
  }
}

TEST_CASE("Dynkin classification of the standard types") {
  std::mt19937_64 rng(9);
  for (std::string type : {"A1", "A4", "A8", "B2", "B3", "B7", "C3", "C5", "D4", "D5", "D8", "E6", "E7", "E8", "F4",
                           "G2"}) {
    auto a = standard_cartan_matrix(type);
    REQUIRE(a);
    CHECK(classify_cartan_matrix(*a).first == type);
    std::vector<std::size_t> perm(a->size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<long>> b(a->size(), std::vector<long>(a->size()));
    for (std::size_t i = 0; i < a->size(); ++i)
      for (std::size_t j = 0; j < a->size(); ++j) b[i][j] = (*a)[perm[i]][perm[j]];
    auto [t, order] = classify_cartan_matrix(b);
    CHECK(t == type);
    for (std::size_t i = 0; i < a->size(); ++i)
      for (std::size_t j = 0; j < a->size(); ++j) CHECK(b[order[i]][order[j]] == (*a)[i][j]);
  }
  std::vector<std::vector<long>> a1a1{{2, 0}, {0, 2}};
  CHECK(classify_cartan_matrix(a1a1).first == "unclassified");
  std::vector<std::vector<long>> a9(9, std::vector<long>(9, 0));
  for (std::size_t i = 0; i < 9; ++i) {
    a9[i][i] = 2;
    if (i + 1 < 9) a9[i][i + 1] = a9[i + 1][i] = -1;
  }
  CHECK(classify_cartan_matrix(a9).first == "unclassified");
}

TEST_CASE("enhanced Dynkin data and DOT output") {
  const auto& rs = testing::so4222().roots;
  EnhancedDynkin d = enhanced_dynkin(rs);
  CHECK(d.type == "D5");
  for (std::size_t i = 0; i < d.cartan_matrix.size(); ++i)
    for (std::size_t j = 0; j < d.cartan_matrix.size(); ++j) {
      if (i == j) {
        CHECK(d.cartan_matrix[i][j] == 2);
      } else {
        CHECK(d.cartan_matrix[i][j] <= 0);
        CHECK((d.cartan_matrix[i][j] == 0) == (d.cartan_matrix[j][i] == 0));
      }
    }
  std::string dot = dynkin_dot(d);
  CHECK(dot.find("graph dynkin") != std::string::npos);
  CHECK(dot.find("(0,1)") != std::string::npos);
  Small so5 = standard({5, 0, 0, 0});
  std::string b2 = dynkin_dot(enhanced_dynkin(so5.rs));
  CHECK(b2.find("black:black") != std::string::npos);
}

TEST_CASE("so(4,4,2,0) and so(4,2,2,2) share the type but not the node degrees") {
  Small other = standard({4, 4, 2, 0});
  EnhancedDynkin a = enhanced_dynkin(testing::so4222().roots);
  EnhancedDynkin b = enhanced_dynkin(other.rs);
  CHECK(a.type == "D5");
  CHECK(b.type == "D5");
  auto sorted = [](std::vector<Degree> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  CHECK(sorted(a.node_degrees) != sorted(b.node_degrees));
  CHECK(a.node_degrees == std::vector<Degree>{Degree(0, 0), Degree(0, 1), Degree(1, 1), Degree(0, 1), Degree(0, 1)});
  CHECK(b.node_degrees == std::vector<Degree>{Degree(0, 0), Degree(0, 1), Degree(0, 0), Degree(1, 1), Degree(1, 1)});
}
