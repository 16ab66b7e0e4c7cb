#include "aqp/telescope.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "aqp/linalg.hpp"

namespace aqp {

namespace {

RatFun q_power(int e) {
  if (e >= 0) return RatFun(BiPoly::var(kq, e));
  return RatFun(BiPoly(1), BiPoly::var(kq, -e));
}

std::optional<int> as_q_power(const RatFun& r) {
  auto exponent = [](const BiPoly& p) -> std::optional<int> {
    if (!p.is_monomial() || p.leading_coeff() != 1 || p.degree(kQ) != 0)
      return std::nullopt;
    return p.degree(kq);
  };
  auto n = exponent(r.num());
  auto d = exponent(r.den());
  if (!n || !d) return std::nullopt;
  return *n - *d;
}

// p(q^s Kv) up to a power of q, with the q-monomial content removed.
TriPoly k_shift(const TriPoly& p, int s) {
  if (p.is_zero() || s == 0) return p;
  TriPoly r = p;
  if (s < 0) r = r * TriPoly::var(kq, -s * p.degree(kKv));
  r = r.scale_var(kKv, kq, s);
  const int low = r.min_degree(kq);
  if (low > 0) r = divide_or_throw(r, TriPoly::var(kq, low));
  return r;
}

TriPoly k_primitive(const TriPoly& p) {
  TriPoly c = detail::content_in(p, kKv);
  return divide_or_throw(p, c);
}

KLaurent to_laurent(const TriPoly& p) {
  KLaurent out;
  auto cs = p.coeffs_in(kKv);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) out[static_cast<int>(i)] = RatFun(recast<2>(cs[i]));
  return out;
}

KLaurent mul(const KLaurent& a, const KLaurent& b) {
  KLaurent out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out[i + j] += x * y;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// f(q^s Kv).
KLaurent k_scale(const KLaurent& f, int s) {
  KLaurent out;
  for (const auto& [i, c] : f) out[i] = c * q_power(s * i);
  return out;
}

RatFun3 to_ratfun3(const KLaurent& f) {
  RatFun3 sum;
  for (const auto& [i, c] : f) {
    TriPoly num = recast<3>(c.num()), den = recast<3>(c.den());
    if (i >= 0) num = num * TriPoly::var(kKv, i);
    else den = den * TriPoly::var(kKv, -i);
    sum += RatFun3(num, den);
  }
  return sum;
}

RatFun3 lift(const RatFun& f) { return recast<3>(f); }

// Cleared numerator of a sum of rational functions.
TriPoly cleared_sum(const std::vector<RatFun3>& parts) {
  TriPoly common(1);
  for (const auto& p : parts)
    if (!p.is_zero()) common = lcm(common, p.den());
  TriPoly total;
  for (const auto& p : parts)
    if (!p.is_zero()) total += p.num() * divide_or_throw(common, p.den());
  return total;
}

struct KeySolution {
  std::vector<RatFun> x;  // weights of the inhomogeneous parts
  KLaurent y;
};

// Solves a(K) y(qK) - b(K/q) y(K) = c(K) sum_i x_i p_i(K) for a Laurent y and
// x != 0 over Q(q, Q). The returned x has its last nonzero entry equal to 1.
std::optional<KeySolution> solve_key_equation(const GosperForm& gf,
                                              const std::vector<TriPoly>& p) {
  const KLaurent a = to_laurent(gf.a);
  const KLaurent b_back = k_scale(to_laurent(gf.b), -1);
  const KLaurent c = to_laurent(gf.c);
  std::vector<KLaurent> rhs;
  int deg_p = std::numeric_limits<int>::min();
  int ord_p = std::numeric_limits<int>::max();
  for (const auto& pi : p) {
    rhs.push_back(mul(c, to_laurent(pi)));
    if (!rhs.back().empty()) {
      deg_p = std::max(deg_p, rhs.back().rbegin()->first);
      ord_p = std::min(ord_p, rhs.back().begin()->first);
    }
  }

  const int da = a.rbegin()->first, db = b_back.rbegin()->first;
  const int oa = a.begin()->first, ob = b_back.begin()->first;
  const bool has_rhs = deg_p != std::numeric_limits<int>::min();
  int hi = std::numeric_limits<int>::min();
  int lo = std::numeric_limits<int>::max();
  if (has_rhs) {
    hi = deg_p - std::max(da, db);
    lo = ord_p - std::min(oa, ob);
  }
  if (da == db) {
    if (auto m = as_q_power(b_back.rbegin()->second / a.rbegin()->second))
      hi = std::max(hi, *m);
  }
  if (oa == ob) {
    if (auto l = as_q_power(b_back.begin()->second / a.begin()->second))
      lo = std::min(lo, *l);
  }
  const bool has_y = hi != std::numeric_limits<int>::min() &&
                     lo != std::numeric_limits<int>::max() && lo <= hi;
  if (has_y && hi - lo + 1 > kDegreeCap)
    throw AlgebraError("polynomial solution degree exceeds the cap of " +
                       std::to_string(kDegreeCap));

  const std::size_t nx = p.size();
  const std::size_t ny = has_y ? static_cast<std::size_t>(hi - lo + 1) : 0;
  const std::size_t ncols = nx + ny;
  std::map<int, std::vector<RatFun>> rows;
  auto add = [&](int row, std::size_t col, const RatFun& v) {
    auto& r = rows[row];
    if (r.empty()) r.resize(ncols);
    r[col] += v;
  };
  for (std::size_t i = 0; i < nx; ++i)
    for (const auto& [e, v] : rhs[i]) add(e, i, -v);
  for (std::size_t j = 0; j < ny; ++j) {
    const int h = lo + static_cast<int>(j);
    const RatFun qh = q_power(h);
    for (const auto& [e, v] : a) add(e + h, nx + j, v * qh);
    for (const auto& [e, v] : b_back) add(e + h, nx + j, -v);
  }

  Echelon<RatFun> ech(ncols);
  for (auto& [e, row] : rows) ech.add_row(std::move(row));
  for (auto& v : ech.nullspace()) {
    std::size_t last = nx;
    for (std::size_t i = 0; i < nx; ++i)
      if (!v[i].is_zero()) last = i;
    if (last == nx) continue;
    const RatFun scale = v[last].inverse();
    KeySolution sol;
    for (std::size_t i = 0; i < nx; ++i) sol.x.push_back(v[i] * scale);
    for (std::size_t j = 0; j < ny; ++j)
      if (!v[nx + j].is_zero()) sol.y[lo + static_cast<int>(j)] = v[nx + j] * scale;
    return sol;
  }
  return std::nullopt;
}

// b(Kv/q) y(Kv) / c(Kv).
RatFun3 certificate_from(const GosperForm& gf, const KLaurent& y) {
  if (y.empty()) return {};
  return scale_var(RatFun3(gf.b), kKv, kq, -1) * to_ratfun3(y) / RatFun3(gf.c);
}

}  // namespace

GosperForm gosper_form(const RatFun3& ratio) {
  if (ratio.is_zero()) throw AlgebraError("zero term ratio");
  TriPoly a = k_primitive(ratio.num());
  TriPoly b = k_primitive(ratio.den());
  TriPoly c(1);
  // Any common factor g(Kv) of a(Kv) and b(q^j Kv) satisfies
  // q^{j(e-e')} = ratio of coefficients, so j <= deg_q a + deg_q b.
  const int j_max = a.degree(kq) + b.degree(kq);
  for (int j = 0; j <= j_max; ++j) {
    if (a.degree(kKv) == 0 || b.degree(kKv) == 0) break;
    for (;;) {
      const TriPoly bj = k_shift(b, j);
      TriPoly g = gcd(a, bj);
      if (g.degree(kKv) == 0) break;
      g = k_primitive(g);
      a = divide_or_throw(a, g);
      b = k_shift(divide_or_throw(bj, g), -j);
      for (int i = 1; i <= j; ++i) c = c * k_shift(g, -i);
      if (a.degree(kKv) == 0 || b.degree(kKv) == 0) break;
    }
  }
  // The q powers dropped along the way and the Kv-free contents leave a
  // scalar factor; fold it into a and b.
  RatFun3 z = ratio * RatFun3(b * c) /
              RatFun3(a * c.scale_var(kKv, kq, 1));
  if (z.num().degree(kKv) != 0 || z.den().degree(kKv) != 0)
    throw AlgebraError("Gosper form scalar depends on Kv");
  a = a * z.num();
  b = b * z.den();
  return {std::move(a), std::move(b), std::move(c)};
}

GosperCertificate qgosper(const RatFun3& ratio) {
  GosperCertificate out;
  out.form = gosper_form(ratio);
  auto sol = solve_key_equation(out.form, {TriPoly(1)});
  if (!sol) return out;
  out.exists = true;
  out.y = std::move(sol->y);
  out.certificate = certificate_from(out.form, out.y);
  if (!gosper_residual(ratio, out.certificate).is_zero())
    throw AlgebraError("q-Gosper certificate failed verification");
  return out;
}

TriPoly gosper_residual(const RatFun3& ratio, const RatFun3& certificate) {
  return cleared_sum({scale_var(certificate, kKv, kq, 1) * ratio,
                      -certificate, RatFun3(-1)});
}

namespace {

// F(n+i, k)/F(n, k) for i = 0..order.
std::vector<RatFun3> shift_quotients(const RatFun3& ratio_n, int order) {
  std::vector<RatFun3> r{RatFun3(1)};
  RatFun3 step = ratio_n;
  for (int i = 1; i <= order; ++i) {
    r.push_back(r.back() * step);
    step = scale_var(step, kQ, kq, 1);
  }
  return r;
}

}  // namespace

std::optional<TelescopeResult> qzeilberger(const QHyperTerm& term, int order) {
  if (order < 1) throw AlgebraError("telescoping order must be >= 1");
  const auto quotients = shift_quotients(term.ratio_n, order);
  TriPoly d(1);
  for (const auto& r : quotients) d = lcm(d, r.den());
  std::vector<TriPoly> p;
  for (const auto& r : quotients)
    p.push_back(r.num() * divide_or_throw(d, r.den()));

  // t(k) = F(n, k) / D(q^k) has ratio r_k(Kv) D(Kv) / D(q Kv).
  const RatFun3 rho = term.ratio_k * RatFun3(d, d.scale_var(kKv, kq, 1));
  const GosperForm gf = gosper_form(rho);
  auto sol = solve_key_equation(gf, p);
  if (!sol) return std::nullopt;

  TelescopeResult out;
  out.order = order;
  out.op = OreOp(sol->x);
  out.certificate = certificate_from(gf, sol->y) / RatFun3(d);
  if (!certificate_residual(term, out.op, out.certificate).is_zero())
    throw AlgebraError("telescoping certificate failed verification");
  out.inhom = boundary_inhom(term, out.certificate);
  return out;
}

TriPoly certificate_residual(const QHyperTerm& term, const OreOp& op,
                             const RatFun3& certificate) {
  const auto quotients = shift_quotients(term.ratio_n, std::max(op.degree(), 0));
  std::vector<RatFun3> parts;
  for (int i = 0; i <= op.degree(); ++i)
    parts.push_back(lift(op.coeff(i)) * quotients[static_cast<std::size_t>(i)]);
  parts.push_back(-(scale_var(certificate, kKv, kq, 1) * term.ratio_k));
  parts.push_back(certificate);
  return cleared_sum(parts);
}

RatFun boundary_inhom(const QHyperTerm& term, const RatFun3& certificate) {
  if (certificate.is_zero()) return {};
  if (certificate.den().eval_var(kKv, Integer(1)).is_zero())
    throw AlgebraError("certificate has a pole at k = 0");
  const RatFun3 at_zero = eval_var(certificate, kKv, Integer(1));
  if (eval_var(term.ratio_n, kKv, Integer(1)) != RatFun3(1) && !at_zero.is_zero())
    throw AlgebraError("boundary term needs F(n, 0) = 1");
  return recast<2>(-at_zero);
}

Recursion find_recursion(const QHyperTerm& term, int max_order) {
  Recursion out;
  for (int order = 1; order <= max_order; ++order) {
    auto r = qzeilberger(term, order);
    if (!r) {
      out.failed_orders.push_back(order);
      continue;
    }
    out.homogeneous = r->inhom.is_zero() ? r->op : make_hom_rec(r->op, r->inhom);
    out.normalized = normalize(out.homogeneous);
    out.telescoped = std::move(*r);
    return out;
  }
  throw OrderBoundExceeded("no telescoper of order <= " +
                           std::to_string(max_order));
}

}  // namespace aqp
