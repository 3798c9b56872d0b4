#include "colorlie/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "colorlie/errors.hpp"

namespace colorlie {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree) {
  std::vector<Scalar> v(degree + 1);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::linear(const Scalar& root) { return Polynomial({-root, Scalar(1)}); }

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  Matrix acc(m.rows(), m.cols());
  Matrix id = Matrix::identity(m.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * m;
    acc.add_scaled(*it, id);
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Scalar> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(static_cast<long>(k)) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = leading().inverse();
  std::vector<Scalar> d = c_;
  for (auto& x : d) x *= inv;
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] -= b.c_[k];
  return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) r[i + j].add_product(a.c_[i], b.c_[j]);
  }
  return Polynomial(std::move(r));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.c_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  Scalar inv = b.leading().inverse();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    std::size_t top = static_cast<std::size_t>(k + b.degree());
    Scalar f = rem[top] * inv;
    quot[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) rem[static_cast<std::size_t>(k) + j].add_product(-f, b.c_[j]);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = Polynomial::divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError(ErrorKind::DimensionMismatch, "characteristic_polynomial", "not square");
  const std::size_t n = m.rows();
  Matrix h = m;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t k = 1; k + 1 < n; ++k) {
    std::size_t sel = k;
    while (sel < n && h(sel, k - 1).is_zero()) ++sel;
    if (sel == n) continue;
    if (sel != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(sel, c), h(k, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, sel), h(r, k));
    }
    Scalar inv = h(k, k - 1).inverse();
    for (std::size_t j = k + 1; j < n; ++j) {
      if (h(j, k - 1).is_zero()) continue;
      Scalar u = h(j, k - 1) * inv;
      for (std::size_t c = 0; c < n; ++c)
        if (!h(k, c).is_zero()) h(j, c).add_product(-u, h(k, c));
      for (std::size_t r = 0; r < n; ++r)
        if (!h(r, j).is_zero()) h(r, k).add_product(u, h(r, j));
    }
  }
  // p_k = det(x I - H[0..k, 0..k]) by the Hessenberg recurrence.
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial({Scalar(1)});
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = Polynomial::linear(h(k - 1, k - 1)) * p[k - 1];
    Scalar t(1);
    for (std::size_t i = 1; i < k; ++i) {
      t *= h(k - i, k - i - 1);
      if (t.is_zero()) break;
      const Scalar& top = h(k - i - 1, k - 1);
      if (top.is_zero()) continue;
      p[k] = p[k] - Polynomial({t * top}) * p[k - i - 1];
    }
  }
  return p[n];
}

namespace {

using GI = GaussianInteger;

GI mul(const GI& a, const GI& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
mpz_class gnorm(const GI& a) { return a.re * a.re + a.im * a.im; }

// Exact quotient a / b when b divides a.
std::optional<GI> exact_div(const GI& a, const GI& b) {
  mpz_class n = gnorm(b);
  mpz_class x = a.re * b.re + a.im * b.im;
  mpz_class y = a.im * b.re - a.re * b.im;
  if (mpz_divisible_p(x.get_mpz_t(), n.get_mpz_t()) == 0 || mpz_divisible_p(y.get_mpz_t(), n.get_mpz_t()) == 0)
    return std::nullopt;
  return GI{x / n, y / n};
}

mpz_class round_div(const mpz_class& x, const mpz_class& n) {
  mpz_class q;
  mpz_class num = 2 * x + n;
  mpz_class den = 2 * n;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

GI ggcd(GI a, GI b) {
  while (b.re != 0 || b.im != 0) {
    mpz_class n = gnorm(b);
    GI q{round_div(a.re * b.re + a.im * b.im, n), round_div(a.im * b.re - a.re * b.im, n)};
    GI qb = mul(q, b);
    GI r{a.re - qb.re, a.im - qb.im};
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

mpz_class powm(const mpz_class& base, const mpz_class& e, const mpz_class& mod) {
  mpz_class r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Gaussian prime above a rational prime p = 1 mod 4.
GI split_prime(const mpz_class& p) {
  mpz_class e = (p - 1) / 2;
  for (mpz_class c = 2;; ++c) {
    if (powm(c, e, p) == p - 1) {
      mpz_class t = powm(c, (p - 1) / 4, p);
      return ggcd(GI{p, 0}, GI{t, 1});
    }
  }
}

}  // namespace

std::optional<std::vector<GaussianInteger>> gaussian_divisors(const GaussianInteger& z) {
  if (z.re == 0 && z.im == 0) return std::nullopt;
  mpz_class n = gnorm(z);
  std::vector<mpz_class> primes;
  constexpr unsigned long kTrialBound = 1000000;
  for (unsigned long d = 2; d <= kTrialBound && mpz_class(d) * d <= n; ++d) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), d) == 0) continue;
    primes.emplace_back(d);
    while (mpz_divisible_ui_p(n.get_mpz_t(), d) != 0) n /= d;
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0) return std::nullopt;
    primes.push_back(n);
  }
  // Gaussian prime factorization of z.
  std::vector<std::pair<GI, unsigned>> factors;
  GI rest = z;
  auto strip = [&](const GI& pi) {
    unsigned e = 0;
    while (auto q = exact_div(rest, pi)) {
      rest = *q;
      ++e;
    }
    if (e > 0) factors.emplace_back(pi, e);
  };
  for (const auto& p : primes) {
    if (p == 2) {
      strip(GI{1, 1});
    } else if (p % 4 == 3) {
      strip(GI{p, 0});
    } else {
      GI pi = split_prime(p);
      strip(pi);
      strip(GI{pi.re, -pi.im});
    }
  }
  std::vector<GI> divisors{GI{1, 0}};
  for (const auto& [pi, e] : factors) {
    std::size_t base = divisors.size();
    GI power{1, 0};
    for (unsigned k = 1; k <= e; ++k) {
      power = mul(power, pi);
      for (std::size_t j = 0; j < base; ++j) divisors.push_back(mul(divisors[j], power));
    }
  }
  return divisors;
}

RootSearch gaussian_rational_roots(const Polynomial& p) {
  RootSearch out;
  if (p.degree() <= 0) {
    out.complete = true;
    return out;
  }
  Polynomial q = squarefree_part(p);
  if (q.coeff(0).is_zero()) {
    out.roots.emplace_back(0);
    q = Polynomial::divmod(q, Polynomial::linear(Scalar(0))).first;
  }
  if (q.degree() >= 1) {
    mpz_class lcm = 1;
    for (const auto& c : q.coeffs()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
    }
    auto to_gi = [&](const Scalar& s) {
      Rational re = s.re() * Rational(lcm);
      Rational im = s.im() * Rational(lcm);
      return GI{re.get_num(), im.get_num()};
    };
    auto num_div = gaussian_divisors(to_gi(q.coeff(0)));
    auto den_div = gaussian_divisors(to_gi(q.leading()));
    constexpr std::size_t kCandidateCap = 400000;
    if (num_div && den_div && num_div->size() * den_div->size() <= kCandidateCap) {
      const std::vector<Scalar> units = {Scalar(1), Scalar(-1), Scalar::i(), -Scalar::i()};
      for (const auto& d : *num_div) {
        Scalar ds(Rational(d.re), Rational(d.im));
        for (const auto& e : *den_div) {
          Scalar base = ds / Scalar(Rational(e.re), Rational(e.im));
          for (const auto& u : units) {
            Scalar r = u * base;
            if (q.degree() < 1) break;
            if (!q(r).is_zero()) continue;
            out.roots.push_back(r);
            q = Polynomial::divmod(q, Polynomial::linear(r)).first;
          }
        }
        if (q.degree() < 1) break;
      }
    }
  }
  out.complete = q.degree() < 1;
  std::sort(out.roots.begin(), out.roots.end(), [](const Scalar& a, const Scalar& b) { return lex_less(a, b); });
  return out;
}

}  // namespace colorlie
