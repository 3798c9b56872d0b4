#include "colorlie/roots.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "colorlie/errors.hpp"
#include "colorlie/polynomial.hpp"

namespace colorlie {

namespace {

Scalar bilinear(const Matrix& k, const Vector& x, const Vector& y) {
  Scalar t;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!y[j].is_zero() && !k(i, j).is_zero()) t += x[i] * k(i, j) * y[j];
  }
  return t;
}

Vector combine(const std::vector<Vector>& basis, const Vector& coeffs, std::size_t n) {
  Vector v(n);
  for (std::size_t k = 0; k < basis.size(); ++k) axpy(v, coeffs[k], basis[k]);
  return v;
}

// True when m is diagonalizable with every eigenvalue in Q(i).
bool gaussian_semisimple(const Matrix& m) {
  RootSearch roots = gaussian_rational_roots(characteristic_polynomial(m));
  if (!roots.complete) return false;
  Matrix acc = Matrix::identity(m.rows());
  for (const auto& lambda : roots.roots) {
    Matrix shifted = m;
    for (std::size_t k = 0; k < m.rows(); ++k) shifted(k, k) -= lambda;
    acc = acc * shifted;
  }
  return acc.is_zero();
}

bool squarefree_minimal_polynomial(const Matrix& m) {
  Polynomial q = squarefree_part(characteristic_polynomial(m));
  return q(m).is_zero();
}

[[noreturn]] void hint_invalid(const std::string& detail) {
  throw DomainError(ErrorKind::HintInvalid, "find_cartan", detail);
}

CartanSubalgebra validate_with(const GradedAlgebra& g, const Matrix& killing, const std::vector<Vector>& hint) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < hint.size(); ++a) {
    if (hint[a].size() != n) hint_invalid("hint vector " + std::to_string(a) + " has the wrong length");
    for (std::size_t i = 0; i < n; ++i)
      if (!hint[a][i].is_zero() && !g.degree(i).is_zero())
        hint_invalid("hint vector " + std::to_string(a) + " is not inside degree (0,0)");
  }
  if (rank(std::span<const Vector>(hint)) != hint.size()) hint_invalid("hint vectors are linearly dependent");
  for (std::size_t a = 0; a < hint.size(); ++a)
    for (std::size_t b = a + 1; b < hint.size(); ++b)
      if (!is_zero(g.bracket(hint[a], hint[b])))
        hint_invalid("hint is not abelian: [h" + std::to_string(a) + ", h" + std::to_string(b) + "] != 0");
  for (std::size_t a = 0; a < hint.size(); ++a)
    if (!squarefree_minimal_polynomial(g.ad(hint[a])))
      hint_invalid("ad(h" + std::to_string(a) + ") is not diagonalizable");
  CartanSubalgebra t;
  t.basis = hint;
  t.gram = Matrix(hint.size(), hint.size());
  for (std::size_t a = 0; a < hint.size(); ++a)
    for (std::size_t b = 0; b < hint.size(); ++b) t.gram(a, b) = bilinear(killing, hint[a], hint[b]);
  auto inv = inverse(t.gram);
  if (!inv) hint_invalid("Killing form restricted to the hint is degenerate");
  t.gram_inverse = std::move(*inv);
  auto even = g.indices_of_degree(Degree(0, 0));
  Matrix sys(hint.size() * n, even.size());
  for (std::size_t a = 0; a < hint.size(); ++a) {
    Matrix ad = g.ad(hint[a]);
    for (std::size_t c = 0; c < even.size(); ++c)
      for (std::size_t r = 0; r < n; ++r) sys(a * n + r, c) = ad(r, even[c]);
  }
  std::size_t centralizer = kernel(sys).size();
  if (centralizer != hint.size())
    hint_invalid("centralizer in degree (0,0) has dimension " + std::to_string(centralizer) + ", hint has " +
                 std::to_string(hint.size()));
  return t;
}

// Null component of ad(h) on the degree-(0,0) part, lifted to algebra coordinates.
std::vector<Vector> fitting_null(const GradedAlgebra& g, const std::vector<std::size_t>& even, const Vector& h) {
  Matrix full = g.ad(h);
  Matrix m(even.size(), even.size());
  for (std::size_t r = 0; r < even.size(); ++r)
    for (std::size_t c = 0; c < even.size(); ++c) m(r, c) = full(even[r], even[c]);
  Matrix power = m;
  std::size_t last = rank(power);
  while (last > 0) {
    Matrix next = power * m;
    std::size_t rk = rank(next);
    if (rk == last) break;
    power = std::move(next);
    last = rk;
  }
  std::vector<Vector> out;
  for (const auto& k : kernel(power)) {
    Vector v(g.dim());
    for (std::size_t t = 0; t < even.size(); ++t) v[even[t]] = k[t];
    out.push_back(std::move(v));
  }
  return out;
}

bool has_gaussian_roots(const GradedAlgebra& g, const CartanSubalgebra& t) {
  for (const auto& h : t.basis)
    if (!gaussian_semisimple(g.ad(h))) return false;
  return true;
}

}  // namespace

CartanSubalgebra validate_cartan(const GradedAlgebra& g, const std::vector<Vector>& hint) {
  return validate_with(g, killing_form(g).gram, hint);
}

CartanSubalgebra find_cartan(const GradedAlgebra& g, const std::optional<std::vector<Vector>>& hint,
                             std::uint64_t seed, std::size_t budget) {
  Matrix killing = killing_form(g).gram;
  if (hint) return validate_with(g, killing, *hint);
  const std::size_t n = g.dim();
  auto even = g.indices_of_degree(Degree(0, 0));
  if (even.empty()) return validate_with(g, killing, {});

  std::vector<bool> semisimple(n, false);
  for (auto i : even) semisimple[i] = gaussian_semisimple(g.ad(i));

  auto attempt_with = [&](const Vector& h) -> std::optional<CartanSubalgebra> {
    auto candidate = fitting_null(g, even, h);
    try {
      CartanSubalgebra t = validate_with(g, killing, candidate);
      if (has_gaussian_roots(g, t)) return t;
    } catch (const DomainError&) {
    }
    return std::nullopt;
  };

  std::uniform_int_distribution<long> small(1, 7);
  std::uniform_int_distribution<long> wide(-4, 4);
  for (std::size_t attempt = 0; attempt < budget; ++attempt) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + attempt);
    std::vector<std::size_t> order = even;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::size_t> torus;
    for (auto i : order) {
      if (!semisimple[i]) continue;
      bool commutes = std::all_of(torus.begin(), torus.end(), [&](std::size_t j) { return g.structure(i, j).empty(); });
      if (commutes) torus.push_back(i);
    }
    if (!torus.empty()) {
      Vector h(n);
      for (auto i : torus) h[i] = Scalar(small(rng));
      if (auto t = attempt_with(h)) return *t;
    }
    Vector h(n);
    for (auto i : even) h[i] = Scalar(wide(rng));
    if (!is_zero(h))
      if (auto t = attempt_with(h)) return *t;
  }
  throw DomainError(ErrorKind::AutoSearchFailed, "find_cartan",
                    "no Cartan subalgebra with eigenvalues in Q(i) found in " + std::to_string(budget) + " attempts");
}

std::size_t RootDatum::multiplicity() const {
  std::size_t m = 0;
  for (const auto& [d, b] : spaces) m += b.size();
  return m;
}

Scalar RootSystem::inner(const Vector& a, const Vector& b) const { return bilinear(cartan.gram_inverse, a, b); }

std::optional<std::size_t> RootSystem::find(const Vector& alpha) const {
  for (std::size_t k = 0; k < roots.size(); ++k)
    if (roots[k].alpha == alpha) return k;
  return std::nullopt;
}

bool RootSystem::is_positive(std::size_t root) const {
  return std::find(positive.begin(), positive.end(), root) != positive.end();
}

Vector killing_dual(const CartanSubalgebra& t, const Vector& alpha) {
  if (t.gram_inverse.rows() != t.basis.size())
    throw DomainError(ErrorKind::SingularForm, "killing_dual", "Killing restriction is degenerate");
  if (alpha.size() != t.basis.size()) throw DomainError(ErrorKind::DimensionMismatch, "killing_dual", "rank mismatch");
  return t.gram_inverse * alpha;
}

Vector killing_dual_in_algebra(const CartanSubalgebra& t, const Vector& alpha) {
  Vector c = killing_dual(t, alpha);
  std::size_t n = t.basis.empty() ? 0 : t.basis.front().size();
  return combine(t.basis, c, n);
}

RootSystem root_decomposition(const GradedAlgebra& g, const CartanSubalgebra& t) {
  RootSystem rs;
  rs.cartan = t;
  rs.killing = killing_form(g).gram;
  const std::size_t n = g.dim();
  std::vector<Matrix> ops;
  for (const auto& h : t.basis) ops.push_back(g.ad(h));
  std::size_t counted = 0;
  for (Degree d : kAllDegrees) {
    auto idx = g.indices_of_degree(d);
    if (idx.empty()) continue;
    std::vector<Vector> start;
    for (auto i : idx) start.push_back(unit_vector(n, i));
    for (auto& space : joint_eigenspaces(ops, start, "root_decomposition")) {
      counted += space.basis.size();
      bool zero = std::all_of(space.eigenvalues.begin(), space.eigenvalues.end(),
                              [](const Scalar& s) { return s.is_zero(); });
      if (zero) {
        if (d.is_zero()) {
          IncrementalSpan span(n);
          for (const auto& h : t.basis) span.insert(h);
          for (const auto& v : space.basis)
            if (span.insert(v)) rs.zero_part[d].push_back(v);
        } else {
          rs.zero_part[d] = std::move(space.basis);
        }
        continue;
      }
      auto k = rs.find(space.eigenvalues);
      if (!k) {
        rs.roots.push_back({space.eigenvalues, {}, {}, {}});
        k = rs.roots.size() - 1;
      }
      rs.roots[*k].spaces[d] = std::move(space.basis);
    }
  }
  if (counted != n)
    throw DomainError(ErrorKind::InconsistentRootSystem, "root_decomposition",
                      "eigenspaces cover " + std::to_string(counted) + " of " + std::to_string(n) + " dimensions");
  std::sort(rs.roots.begin(), rs.roots.end(),
            [](const RootDatum& a, const RootDatum& b) { return lex_less(b.alpha, a.alpha); });
  for (auto& r : rs.roots) {
    r.h_alpha_cartan = killing_dual(t, r.alpha);
    r.h_alpha = combine(t.basis, r.h_alpha_cartan, n);
  }
  positive_and_simple(rs);
  return rs;
}

bool is_self_centralizing(const RootSystem& rs) {
  return std::all_of(rs.zero_part.begin(), rs.zero_part.end(), [](const auto& kv) { return kv.second.empty(); });
}

void positive_and_simple(RootSystem& rs, const RootOrder& order) {
  const std::size_t m = rs.roots.size();
  std::vector<int> side(m, 0);
  auto sign_of = [](const Scalar& v, std::size_t root) {
    if (!v.is_real() || v.is_zero())
      throw DomainError(ErrorKind::DegenerateOrder, "positive_and_simple",
                        "order value " + v.to_string() + " on root " + std::to_string(root) + " is not a nonzero real");
    return sgn(v.re()) > 0 ? 1 : -1;
  };
  auto first_nonzero_sign = [&](const Vector& coords, std::size_t root) {
    for (const auto& c : coords)
      if (!c.is_zero()) return sign_of(c, root);
    return sign_of(Scalar(), root);
  };
  if (order.functional) {
    if (order.functional->size() != rs.rank())
      throw DomainError(ErrorKind::DimensionMismatch, "positive_and_simple", "order functional has the wrong length");
    for (std::size_t k = 0; k < m; ++k) {
      Scalar v;
      for (std::size_t i = 0; i < rs.rank(); ++i) v.add_product((*order.functional)[i], rs.roots[k].alpha[i]);
      side[k] = sign_of(v, k);
    }
  } else {
    bool real = std::all_of(rs.roots.begin(), rs.roots.end(), [](const RootDatum& r) {
      return std::all_of(r.alpha.begin(), r.alpha.end(), [](const Scalar& s) { return s.is_real(); });
    });
    if (real) {
      for (std::size_t k = 0; k < m; ++k) side[k] = first_nonzero_sign(rs.roots[k].alpha, k);
    } else {
      IncrementalSpan span(rs.rank());
      std::vector<Vector> chosen;
      for (const auto& r : rs.roots)
        if (span.insert(r.alpha)) chosen.push_back(r.alpha);
      SpanSolver solver(chosen);
      for (std::size_t k = 0; k < m; ++k) side[k] = first_nonzero_sign(*solver.coordinates(rs.roots[k].alpha), k);
    }
  }
  rs.positive.clear();
  rs.simple.clear();
  for (std::size_t k = 0; k < m; ++k) {
    if (side[k] > 0) rs.positive.push_back(k);
    Vector neg = Scalar(-1) * rs.roots[k].alpha;
    if (!rs.find(neg))
      throw DomainError(ErrorKind::InconsistentRootSystem, "positive_and_simple",
                        "negative of root " + vector_string(rs.roots[k].alpha) + " is missing");
  }
  for (auto a : rs.positive) {
    bool decomposable = false;
    for (auto b : rs.positive) {
      if (a == b) continue;
      auto c = rs.find(rs.roots[a].alpha - rs.roots[b].alpha);
      if (c && side[*c] > 0) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) rs.simple.push_back(a);
  }
  std::vector<Vector> simple_alpha;
  for (auto s : rs.simple) simple_alpha.push_back(rs.roots[s].alpha);
  SpanSolver solver(simple_alpha);
  rs.simple_coords.assign(m, {});
  for (std::size_t k = 0; k < m; ++k) {
    auto c = solver.coordinates(rs.roots[k].alpha);
    bool ok = c.has_value();
    if (ok)
      for (const auto& x : *c) {
        if (!x.is_real() || x.re().get_den() != 1 || (side[k] > 0 ? sgn(x.re()) < 0 : sgn(x.re()) > 0)) {
          ok = false;
          break;
        }
        rs.simple_coords[k].push_back(x.re().get_num().get_si());
      }
    if (!ok)
      throw DomainError(ErrorKind::InconsistentRootSystem, "positive_and_simple",
                        "root " + vector_string(rs.roots[k].alpha) + " is not an integral one-signed combination of simple roots");
  }
  rs.rho = Vector(rs.rank());
  for (auto k : rs.positive) axpy(rs.rho, Scalar(Rational(1, 2)), rs.roots[k].alpha);
}

Sl2Triplet sl2_triplet(const GradedAlgebra& g, const RootSystem& rs, std::size_t root, Degree degree) {
  const RootDatum& a = rs.roots.at(root);
  auto neg = rs.find(Scalar(-1) * a.alpha);
  auto pos_space = a.spaces.find(degree);
  if (!neg || pos_space == a.spaces.end() || rs.roots[*neg].spaces.count(degree) == 0)
    throw DomainError(ErrorKind::PreconditionFailed, "sl2_triplet",
                      "root " + vector_string(a.alpha) + " has no space of degree " + degree.to_string());
  const Vector& e = pos_space->second.front();
  const auto& neg_space = rs.roots[*neg].spaces.at(degree);
  const Vector* f = nullptr;
  Scalar pairing;
  for (const auto& v : neg_space) {
    pairing = bilinear(rs.killing, e, v);
    if (!pairing.is_zero()) {
      f = &v;
      break;
    }
  }
  if (!f)
    throw DomainError(ErrorKind::PairingDegenerate, "sl2_triplet",
                      "K(E, F) = 0 for root " + vector_string(a.alpha) + " in degree " + degree.to_string());
  Scalar len = rs.inner(a.alpha, a.alpha);
  Scalar scale = Scalar(2) / len;
  Sl2Triplet t;
  t.root = root;
  t.degree = degree;
  t.h = scale * a.h_alpha;
  t.x = scale * e;
  t.y = pairing.inverse() * (*f);
  bool ok = g.bracket(t.h, t.x) == Scalar(2) * t.x && g.bracket(t.h, t.y) == Scalar(-2) * t.y &&
            g.bracket(t.x, t.y) == t.h;
  if (!ok)
    throw DomainError(ErrorKind::InconsistentRootSystem, "sl2_triplet",
                      "sl2 relations fail for root " + vector_string(a.alpha) + " in degree " + degree.to_string());
  return t;
}

std::vector<Sl2Triplet> all_sl2_triplets(const GradedAlgebra& g, const RootSystem& rs) {
  std::vector<Sl2Triplet> out;
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    for (const auto& [d, basis] : rs.roots[k].spaces) out.push_back(sl2_triplet(g, rs, k, d));
  return out;
}

Rational cartan_number(const RootSystem& rs, std::size_t beta, std::size_t alpha) {
  const Vector& a = rs.roots.at(alpha).alpha;
  Scalar aa = rs.inner(a, a);
  if (aa.is_zero() || !aa.is_real())
    throw DomainError(ErrorKind::InconsistentRootSystem, "cartan_number", "<a,a> is not a nonzero rational");
  Scalar c = Scalar(2) * rs.inner(rs.roots.at(beta).alpha, a) / aa;
  if (!c.is_real()) throw DomainError(ErrorKind::InconsistentRootSystem, "cartan_number", "Cartan number is not real");
  return c.re();
}

std::size_t reflect(const RootSystem& rs, std::size_t alpha, std::size_t beta) {
  Rational c = cartan_number(rs, beta, alpha);
  Vector v = rs.roots[beta].alpha;
  axpy(v, Scalar(-c), rs.roots[alpha].alpha);
  auto k = rs.find(v);
  if (!k)
    throw DomainError(ErrorKind::InconsistentRootSystem, "reflect",
                      "reflection of " + vector_string(rs.roots[beta].alpha) + " in " +
                          vector_string(rs.roots[alpha].alpha) + " is not a root");
  return *k;
}

RootString root_string(const RootSystem& rs, std::size_t beta, std::size_t alpha) {
  const Vector& b = rs.roots.at(beta).alpha;
  const Vector& a = rs.roots.at(alpha).alpha;
  auto member = [&](long k) {
    Vector v = b;
    axpy(v, Scalar(k), a);
    return is_zero(v) || rs.find(v).has_value();
  };
  RootString s;
  while (member(-(s.p + 1))) ++s.p;
  while (member(s.q + 1)) ++s.q;
  if (Rational(s.p - s.q) != cartan_number(rs, beta, alpha))
    throw DomainError(ErrorKind::InconsistentRootSystem, "root_string",
                      "p - q differs from the Cartan number for " + vector_string(b) + " along " + vector_string(a));
  return s;
}

WeylGroup weyl_group(const RootSystem& rs, std::size_t max_order) {
  const std::size_t m = rs.roots.size();
  WeylGroup w;
  if (rs.positive.empty())
    for (std::size_t k = 0; k < m; ++k) w.generators.push_back(k);
  else
    w.generators = rs.positive;
  std::vector<std::vector<std::uint16_t>> gens;
  for (auto a : w.generators) {
    std::vector<std::uint16_t> p(m);
    for (std::size_t b = 0; b < m; ++b) p[b] = static_cast<std::uint16_t>(reflect(rs, a, b));
    gens.push_back(std::move(p));
  }
  std::vector<std::uint16_t> id(m);
  for (std::size_t k = 0; k < m; ++k) id[k] = static_cast<std::uint16_t>(k);
  std::map<std::vector<std::uint16_t>, std::size_t> seen{{id, 0}};
  w.elements.push_back(id);
  w.words.push_back({});
  for (std::size_t head = 0; head < w.elements.size(); ++head) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      std::vector<std::uint16_t> next(m);
      for (std::size_t k = 0; k < m; ++k) next[k] = gens[gi][w.elements[head][k]];
      if (seen.count(next)) continue;
      if (w.elements.size() >= max_order)
        throw DomainError(ErrorKind::PreconditionFailed, "weyl_group",
                          "closure exceeds " + std::to_string(max_order) + " elements");
      seen.emplace(next, w.elements.size());
      std::vector<std::size_t> word{w.generators[gi]};
      word.insert(word.end(), w.words[head].begin(), w.words[head].end());
      w.elements.push_back(std::move(next));
      w.words.push_back(std::move(word));
    }
  }
  return w;
}

bool weyl_group_preserves_form(const RootSystem& rs, const WeylGroup& w) {
  const std::size_t m = rs.roots.size();
  std::vector<Scalar> ip(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ip[i * m + j] = rs.inner(rs.roots[i].alpha, rs.roots[j].alpha);
  for (const auto& e : w.elements) {
    std::vector<bool> hit(m, false);
    for (auto k : e) {
      if (k >= m || hit[k]) return false;
      hit[k] = true;
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (ip[e[i] * m + e[j]] != ip[i * m + j]) return false;
  }
  return true;
}

Degree root_degree(const RootSystem& rs, std::size_t root) {
  const auto& spaces = rs.roots.at(root).spaces;
  if (spaces.size() != 1)
    throw DomainError(ErrorKind::MultiDegreeRoot, "root_degree",
                      "root " + vector_string(rs.roots[root].alpha) + " has components in " +
                          std::to_string(spaces.size()) + " degrees");
  return spaces.begin()->first;
}

std::optional<std::vector<std::vector<long>>> standard_cartan_matrix(const std::string& type) {
  if (type.size() < 2) return std::nullopt;
  char letter = type[0];
  std::size_t n = 0;
  try {
    n = std::stoul(type.substr(1));
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<bool> is_long(n, true);
  long mult = 2;
  auto path = [&](std::size_t len) {
    for (std::size_t k = 0; k + 1 < len; ++k) edges.emplace_back(k, k + 1);
  };
  switch (letter) {
    case 'A':
      if (n < 1) return std::nullopt;
      path(n);
      break;
    case 'B':
      if (n < 2) return std::nullopt;
      path(n);
      is_long[n - 1] = false;
      break;
    case 'C':
      if (n < 3) return std::nullopt;
      path(n);
      for (std::size_t k = 0; k + 1 < n; ++k) is_long[k] = false;
      break;
    case 'D':
      if (n < 4) return std::nullopt;
      path(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) return std::nullopt;
      edges = {{0, 2}, {1, 3}};
      for (std::size_t k = 2; k + 1 < n; ++k) edges.emplace_back(k, k + 1);
      break;
    case 'F':
      if (n != 4) return std::nullopt;
      path(4);
      is_long[2] = is_long[3] = false;
      break;
    case 'G':
      if (n != 2) return std::nullopt;
      path(2);
      is_long[0] = false;
      mult = 3;
      break;
    default:
      return std::nullopt;
  }
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (std::size_t k = 0; k < n; ++k) a[k][k] = 2;
  for (auto [i, j] : edges) {
    if (is_long[i] == is_long[j]) {
      a[i][j] = a[j][i] = -1;
    } else {
      std::size_t l = is_long[i] ? i : j, s = is_long[i] ? j : i;
      a[l][s] = -mult;
      a[s][l] = -1;
    }
  }
  return a;
}

std::pair<std::string, std::vector<std::size_t>> classify_cartan_matrix(const std::vector<std::vector<long>>& a,
                                                                        const std::vector<std::size_t>& keys) {
  const std::size_t n = a.size();
  std::vector<std::size_t> identity(n);
  for (std::size_t k = 0; k < n; ++k) identity[k] = k;
  const std::pair<std::string, std::vector<std::size_t>> unclassified{"unclassified", identity};
  if (n == 0 || n > 8) return unclassified;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n || a[i][i] != 2) return unclassified;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a[i][j] > 0 || (a[i][j] == 0) != (a[j][i] == 0))) return unclassified;
  }
  std::vector<bool> reached(n, false);
  std::deque<std::size_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (std::size_t u = 0; u < n; ++u)
      if (!reached[u] && a[v][u] != 0) {
        reached[u] = true;
        queue.push_back(u);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) return unclassified;

  std::vector<std::size_t> key = keys.empty() ? identity : keys;
  std::vector<std::string> candidates = {"A", "B", "C", "D", "E", "F", "G"};
  for (const auto& letter : candidates) {
    std::string type = letter + std::to_string(n);
    auto c = standard_cartan_matrix(type);
    if (!c) continue;
    std::optional<std::vector<std::size_t>> best;
    std::vector<std::size_t> sigma;
    std::vector<bool> used(n, false);
    std::function<void(std::size_t)> search = [&](std::size_t pos) {
      if (pos == n) {
        auto better = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
          for (std::size_t k = 0; k < n; ++k)
            if (key[x[k]] != key[y[k]]) return key[x[k]] < key[y[k]];
          return false;
        };
        if (!best || better(sigma, *best)) best = sigma;
        return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < pos && ok; ++k)
          ok = a[sigma[k]][v] == (*c)[k][pos] && a[v][sigma[k]] == (*c)[pos][k];
        if (!ok) continue;
        used[v] = true;
        sigma.push_back(v);
        search(pos + 1);
        sigma.pop_back();
        used[v] = false;
      }
    };
    search(0);
    if (best) return {type, *best};
  }
  return unclassified;
}

EnhancedDynkin enhanced_dynkin(const RootSystem& rs) {
  if (!is_self_centralizing(rs))
    throw DomainError(ErrorKind::NotSelfCentralizing, "enhanced_dynkin",
                      "Cartan subalgebra is not self-centralizing; node degrees are undefined");
  const std::size_t n = rs.simple.size();
  std::vector<std::vector<long>> a(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = cartan_number(rs, rs.simple[i], rs.simple[j]);
      if (c.get_den() != 1)
        throw DomainError(ErrorKind::InconsistentRootSystem, "enhanced_dynkin", "non-integral Cartan number");
      a[i][j] = c.get_num().get_si();
    }
  std::vector<std::size_t> by_key(n);
  for (std::size_t k = 0; k < n; ++k) by_key[k] = k;
  std::sort(by_key.begin(), by_key.end(), [&](std::size_t x, std::size_t y) {
    Degree dx = root_degree(rs, rs.simple[x]), dy = root_degree(rs, rs.simple[y]);
    if (dx != dy) return dx < dy;
    return lex_less(rs.roots[rs.simple[x]].alpha, rs.roots[rs.simple[y]].alpha);
  });
  std::vector<std::size_t> keys(n);
  for (std::size_t r = 0; r < n; ++r) keys[by_key[r]] = r;
  auto [type, order] = classify_cartan_matrix(a, keys);
  EnhancedDynkin d;
  d.type = type;
  d.cartan_matrix.assign(n, std::vector<long>(n));
  for (std::size_t i = 0; i < n; ++i) {
    d.nodes.push_back(rs.simple[order[i]]);
    d.node_degrees.push_back(root_degree(rs, rs.simple[order[i]]));
    for (std::size_t j = 0; j < n; ++j) d.cartan_matrix[i][j] = a[order[i]][order[j]];
  }
  return d;
}

std::string dynkin_dot(const EnhancedDynkin& d) {
  std::ostringstream out;
  out << "graph dynkin {\n  label=\"" << d.type << "\";\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    out << "  n" << i + 1 << " [label=\"α" << i + 1 << " " << d.node_degrees[i].to_string() << "\"];\n";
  for (std::size_t i = 0; i < d.nodes.size(); ++i)
    for (std::size_t j = i + 1; j < d.nodes.size(); ++j) {
      long m = d.cartan_matrix[i][j] * d.cartan_matrix[j][i];
      if (m == 0) continue;
      out << "  n" << i + 1 << " -- n" << j + 1;
      if (m > 1) {
        // Arrow points at the shorter root: |a_ij| > 1 means node j is short.
        bool j_short = d.cartan_matrix[i][j] < -1;
        std::string color = "black";
        for (long k = 1; k < m; ++k) color += ":black";
        out << " [color=\"" << color << "\", dir=" << (j_short ? "forward" : "back") << "]";
      }
      out << ";\n";
    }
  out << "}\n";
  return out.str();
}

std::vector<CheckResult> verify_root_system(const GradedAlgebra& g, const RootSystem& rs) {
  std::vector<CheckResult> out;
  auto fail = [](CheckResult& c, const std::string& why) {
    if (c.pass) c.detail = why;
    c.pass = false;
  };
  const std::size_t n = g.dim();
  const std::size_t m = rs.roots.size();

  CheckResult eigen{"root vectors are ad(t) eigenvectors", true, {}};
  CheckResult mult{"degree components are at most 1-dimensional", true, {}};
  CheckResult dual{"K(H_alpha, H) = alpha(H)", true, {}};
  for (const auto& r : rs.roots) {
    for (const auto& [d, basis] : r.spaces) {
      if (basis.size() > 1) fail(mult, vector_string(r.alpha) + " in degree " + d.to_string());
      for (const auto& e : basis)
        for (std::size_t k = 0; k < rs.rank(); ++k)
          if (g.bracket(rs.cartan.basis[k], e) != r.alpha[k] * e) fail(eigen, vector_string(r.alpha));
    }
    for (std::size_t k = 0; k < rs.rank(); ++k)
      if (bilinear(rs.killing, r.h_alpha, rs.cartan.basis[k]) != r.alpha[k]) fail(dual, vector_string(r.alpha));
  }

  CheckResult negation{"roots are closed under negation", true, {}};
  CheckResult pairing{"K pairs g_alpha^a with g_-alpha^a nondegenerately", true, {}};
  CheckResult ortho{"K(g_alpha^a, g_beta^b) = 0 unless beta = -alpha and a = b", true, {}};
  CheckResult to_dual{"[E_alpha, X] = K(E_alpha, X) H_alpha for X in g_-alpha", true, {}};
  for (std::size_t i = 0; i < m; ++i) {
    auto neg = rs.find(Scalar(-1) * rs.roots[i].alpha);
    if (!neg) {
      fail(negation, vector_string(rs.roots[i].alpha));
      continue;
    }
    for (const auto& [d, basis] : rs.roots[i].spaces) {
      auto it = rs.roots[*neg].spaces.find(d);
      if (it == rs.roots[*neg].spaces.end() || it->second.size() != basis.size()) {
        fail(pairing, vector_string(rs.roots[i].alpha) + " degree " + d.to_string());
        continue;
      }
      Matrix p(basis.size(), basis.size());
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) p(a, b) = bilinear(rs.killing, basis[a], it->second[b]);
      if (rank(p) != basis.size()) fail(pairing, vector_string(rs.roots[i].alpha) + " degree " + d.to_string());
      for (const auto& e : basis)
        for (const auto& x : it->second) {
          Vector expect = bilinear(rs.killing, e, x) * rs.roots[i].h_alpha;
          if (g.bracket(e, x) != expect) fail(to_dual, vector_string(rs.roots[i].alpha));
        }
    }
    for (std::size_t j = 0; j < m; ++j)
      for (const auto& [a, ba] : rs.roots[i].spaces)
        for (const auto& [b, bb] : rs.roots[j].spaces) {
          if (j == *neg && a == b) continue;
          for (const auto& x : ba)
            for (const auto& y : bb)
              if (!bilinear(rs.killing, x, y).is_zero())
                fail(ortho, vector_string(rs.roots[i].alpha) + " vs " + vector_string(rs.roots[j].alpha));
        }
  }

  CheckResult count{"dim t + root spaces + zero part = dim g", true, {}};
  std::size_t total = rs.rank();
  for (const auto& r : rs.roots) total += r.multiplicity();
  for (const auto& [d, b] : rs.zero_part) total += b.size();
  if (total != n) fail(count, std::to_string(total) + " != " + std::to_string(n));

  CheckResult positivity{"<alpha, alpha> > 0", true, {}};
  CheckResult integrality{"2<beta,alpha>/<alpha,alpha> is an integer", true, {}};
  CheckResult reflection{"reflections permute the roots", true, {}};
  for (std::size_t i = 0; i < m; ++i) {
    Scalar aa = rs.inner(rs.roots[i].alpha, rs.roots[i].alpha);
    if (!aa.is_real() || sgn(aa.re()) <= 0) {
      fail(positivity, vector_string(rs.roots[i].alpha));
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      try {
        if (cartan_number(rs, j, i).get_den() != 1) fail(integrality, vector_string(rs.roots[j].alpha));
        reflect(rs, i, j);
      } catch (const DomainError& e) {
        fail(reflection, e.what());
      }
    }
  }
  CheckResult span{"roots span the dual of t", true, {}};
  std::vector<Vector> alphas;
  for (const auto& r : rs.roots) alphas.push_back(r.alpha);
  if (rank(std::span<const Vector>(alphas)) != rs.rank()) fail(span, "rank deficit");

  out = {eigen, mult, dual, negation, pairing, ortho, to_dual, count, positivity, integrality, reflection, span};
  if (is_self_centralizing(rs)) {
    CheckResult one{"self-centralizing: root spaces are 1-dimensional and 2alpha is never a root", true, {}};
    for (const auto& r : rs.roots) {
      if (r.multiplicity() != 1) fail(one, vector_string(r.alpha));
      if (rs.find(Scalar(2) * r.alpha)) fail(one, "2" + vector_string(r.alpha));
    }
    out.push_back(one);
  }
  return out;
}

std::size_t sl2_generated_dimension(const GradedAlgebra& g, const RootSystem& rs) {
  const std::size_t n = g.dim();
  std::vector<Matrix> gens;
  IncrementalSpan span(n);
  std::deque<Vector> queue;
  for (const auto& t : all_sl2_triplets(g, rs))
    for (const Vector* v : {&t.x, &t.y}) {
      gens.push_back(g.ad(*v));
      if (span.insert(*v)) queue.push_back(*v);
    }
  while (!queue.empty() && span.dim() < n) {
    Vector v = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : gens) {
      Vector w = a * v;
      if (span.insert(w)) queue.push_back(std::move(w));
    }
  }
  return span.dim();
}

}  // namespace colorlie
