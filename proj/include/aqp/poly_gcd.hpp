#pragma once

#include "aqp/poly.hpp"

namespace aqp {

/// Nonnegative gcd of all integer coefficients (0 for the zero polynomial).
template <int N>
Integer content(const Poly<N>& p) {
  Integer g = 0;
  for (const auto& t : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Makes the leading coefficient positive.
template <int N>
Poly<N> with_positive_lc(const Poly<N>& p) {
  if (!p.is_zero() && p.leading_coeff() < 0) return -p;
  return p;
}

template <int N>
Poly<N> gcd(const Poly<N>& a, const Poly<N>& b);

namespace detail {

template <int N>
Poly<N> monomial_gcd(const Poly<N>& a, const Poly<N>& b) {
  typename Poly<N>::Exponents e;
  e.fill(Poly<N>::kMaxExponent);
  for (const auto* p : {&a, &b})
    for (int v = 0; v < N; ++v) e[v] = std::min(e[v], p->min_degree(v));
  return Poly<N>::monomial(Integer(1), e);
}

inline Integer symmetric_mod(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

template <int N>
int highest_var(const Poly<N>& a, const Poly<N>& b) {
  for (int v = N - 1; v >= 0; --v)
    if (a.contains_var(v) || b.contains_var(v)) return v;
  return -1;
}

template <int N>
Poly<N> content_in(const Poly<N>& p, int var);

/// Heuristic gcd by evaluation at a large integer and balanced-digit
/// reconstruction. Returns nothing if every attempt fails the division test.
template <int N>
std::optional<Poly<N>> heuristic_gcd(const Poly<N>& a0, const Poly<N>& b0) {
  using P = Poly<N>;
  Integer ca = content(a0), cb = content(b0);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  P a = a0.divexact(ca), b = b0.divexact(cb);
  int v = highest_var(a, b);
  if (v < 0) return P(c);
  if (!a.contains_var(v)) return c * gcd(a, content_in(b, v));
  if (!b.contains_var(v)) return c * gcd(content_in(a, v), b);

  Integer xi = 2 * std::min(a.max_norm(), b.max_norm()) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    P ea = a.eval_var(v, xi), eb = b.eval_var(v, xi);
    if (!ea.is_zero() && !eb.is_zero()) {
      if (auto gamma = heuristic_gcd(ea, eb)) {
        P rebuilt;
        P rest = *gamma;
        for (int k = 0; !rest.is_zero(); ++k) {
          if (k > P::kMaxExponent) break;
          std::vector<typename P::Term> digits;
          for (const auto& t : rest.terms()) {
            Integer d = symmetric_mod(t.coeff, xi);
            if (d != 0) digits.push_back({t.key, d});
          }
          P digit = P::from_terms(std::move(digits));
          rest = (rest - digit).divexact(xi);
          rebuilt += digit * P::var(v, k);
        }
        if (!rebuilt.is_zero()) {
          rebuilt = with_positive_lc(rebuilt.divexact(content(rebuilt)));
          if (divide_exact(a, rebuilt) && divide_exact(b, rebuilt))
            return c * rebuilt;
        }
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

/// gcd of the coefficients of p viewed as a polynomial in x_var.
template <int N>
Poly<N> content_in(const Poly<N>& p, int var) {
  Poly<N> g;
  for (const auto& c : p.coeffs_in(var)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? with_positive_lc(c) : gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

/// Pseudo-remainder of a by b with respect to x_var (up to a nonzero factor
/// free of x_var).
template <int N>
Poly<N> pseudo_remainder(const Poly<N>& a, const Poly<N>& b, int var) {
  auto A = a.coeffs_in(var);
  auto B = b.coeffs_in(var);
  const Poly<N> lc = B.back();
  const std::size_t db = B.size() - 1;
  while (A.size() > db && !A.empty()) {
    Poly<N> lead = A.back();
    std::size_t shift = A.size() - 1 - db;
    for (auto& x : A) x = lc * x;
    for (std::size_t i = 0; i <= db; ++i) A[i + shift] -= lead * B[i];
    while (!A.empty() && A.back().is_zero()) A.pop_back();
  }
  return Poly<N>::from_coeffs_in(var, A);
}

/// Primitive polynomial remainder sequence, recursive in the variables.
template <int N>
Poly<N> prs_gcd(const Poly<N>& a0, const Poly<N>& b0) {
  using P = Poly<N>;
  int v = highest_var(a0, b0);
  if (v < 0) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a0.leading_coeff().get_mpz_t(),
            b0.leading_coeff().get_mpz_t());
    return P(g);
  }
  P ca = content_in(a0, v), cb = content_in(b0, v);
  P c = gcd(ca, cb);
  P a = divide_or_throw(a0, ca), b = divide_or_throw(b0, cb);
  if (a.degree(v) < b.degree(v)) std::swap(a, b);
  while (!b.is_zero() && b.degree(v) > 0) {
    P r = pseudo_remainder(a, b, v);
    a = std::move(b);
    b = r.is_zero() ? r : divide_or_throw(r, content_in(r, v));
  }
  P g = b.is_zero() ? divide_or_throw(a, content_in(a, v)) : P(1);
  return with_positive_lc(c * g);
}

}  // namespace detail

/// Greatest common divisor in Z[x0..x{N-1}], including integer content, with
/// positive leading coefficient. gcd(0, 0) = 0.
template <int N>
Poly<N> gcd(const Poly<N>& a, const Poly<N>& b) {
  using P = Poly<N>;
  if (a.is_zero()) return with_positive_lc(b);
  if (b.is_zero()) return with_positive_lc(a);
  if (a == b) return with_positive_lc(a);
  P mono = detail::monomial_gcd(a, b);
  P ra = mono.is_one() ? a : divide_or_throw(a, mono);
  P rb = mono.is_one() ? b : divide_or_throw(b, mono);
  if (ra.is_constant() || rb.is_constant()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), content(ra).get_mpz_t(), content(rb).get_mpz_t());
    return g * mono;
  }
  if (auto d = divide_exact(ra, rb)) return with_positive_lc(rb) * mono;
  if (auto d = divide_exact(rb, ra)) return with_positive_lc(ra) * mono;
  if (auto g = detail::heuristic_gcd(ra, rb)) return with_positive_lc(*g * mono);
  return detail::prs_gcd(ra, rb) * mono;
}

/// Primitive part: p divided by its integer content, positive leading
/// coefficient. The sign is carried by the content (see content_and_primitive).
template <int N>
Poly<N> primitive_part(const Poly<N>& p) {
  if (p.is_zero()) return p;
  return with_positive_lc(p.divexact(content(p)));
}

/// Splits p = c * pp with pp primitive and positive leading coefficient; c
/// carries the sign of the leading coefficient of p.
template <int N>
std::pair<Integer, Poly<N>> content_and_primitive(const Poly<N>& p) {
  if (p.is_zero()) throw AlgebraError("content of the zero polynomial");
  Integer c = content(p);
  if (p.leading_coeff() < 0) c = -c;
  return {c, p.divexact(c)};
}

template <int N>
Poly<N> lcm(const Poly<N>& a, const Poly<N>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return with_positive_lc(divide_or_throw(a, gcd(a, b)) * b);
}

}  // namespace aqp
