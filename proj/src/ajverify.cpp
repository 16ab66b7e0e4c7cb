#include "aqp/ajverify.hpp"

#include <map>
#include <stdexcept>
#include <utility>

#include "aqp/linalg.hpp"
#include "aqp/parse.hpp"

namespace aqp {

const KnotRecord& knot_record(Knot knot) {
  static const KnotRecord trefoil{Knot::kTrefoil, "(L-1)*(L+M^6)",
                                  parse_charpoly("(L-1)*(L+M^6)")};
  static const KnotRecord fig8{
      Knot::kFigure8,
      "(L-1)*(-L+L*M^2+M^4+2*L*M^4+L^2*M^4+L*M^6-L*M^8)",
      parse_charpoly("(L-1)*(-L+L*M^2+M^4+2*L*M^4+L^2*M^4+L*M^6-L*M^8)")};
  return knot == Knot::kTrefoil ? trefoil : fig8;
}

CharPoly characteristic_poly(const NormalizedOp& op) {
  std::vector<Poly<2>::Term> raw;
  for (int k = 0; k <= op.degree(); ++k) {
    const UniPoly u = eval_q_at_1(op.coeffs[static_cast<std::size_t>(k)]);
    for (const auto& t : u.terms())
      raw.push_back({Poly<2>::pack({k, 2 * UniPoly::exponent(t.key, 0)}), t.coeff});
  }
  Poly<2> p = Poly<2>::from_terms(std::move(raw));
  if (p.is_zero()) return {};
  return {primitive_part(p)};
}

namespace {

Poly<2> strip_L_power(const Poly<2>& p) {
  const int low = p.min_degree(CharPoly::kL);
  if (low == 0) return p;
  return divide_or_throw(p, Poly<2>::var(CharPoly::kL, low));
}

}  // namespace

bool essential_equality(const CharPoly& a, const CharPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw AlgebraError("essential equality with a zero polynomial");
  const Poly<2> pa = strip_L_power(a.poly), pb = strip_L_power(b.poly);
  const Poly<2> la = pa.coeffs_in(CharPoly::kL).back();
  const Poly<2> lb = pb.coeffs_in(CharPoly::kL).back();
  return pa * lb == pb * la;
}

bool lemma31_check(const NormalizedOp& op) {
  Integer total = 0;
  for (const auto& b : op.coeffs)
    for (const auto& t : b.terms()) total += t.coeff;
  return total == 0;
}

namespace {

// b(q, q^n) as a Laurent polynomial in q.
LaurentPoly at_Q_power(const BiPoly& b, int n) {
  std::vector<LaurentPoly::Term> raw;
  raw.reserve(b.size());
  for (const auto& t : b.terms()) {
    auto e = BiPoly::unpack(t.key);
    raw.push_back({e[kq] + n * e[kQ], Rational(t.coeff)});
  }
  return LaurentPoly::from_terms(std::move(raw));
}

}  // namespace

AnnihilationCheck check_annihilation(const NormalizedOp& op,
                                     const std::vector<LaurentPoly>& table,
                                     int n_max) {
  AnnihilationCheck out;
  const int top = static_cast<int>(table.size()) - 1;
  for (int n = 1; n <= n_max && n + op.degree() <= top; ++n) {
    LaurentPoly sum;
    for (int k = 0; k <= op.degree(); ++k)
      sum += at_Q_power(op.coeffs[static_cast<std::size_t>(k)], n) *
             table[static_cast<std::size_t>(n + k)];
    ++out.n_checked;
    if (!sum.is_zero()) {
      out.ok = false;
      out.first_failure = n;
      return out;
    }
  }
  return out;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// Rows of the linear system for a(q,Q) J(n+1) + b(q,Q) J(n) = 0, one per
// power of q and per n. Columns: alpha_{i,j} (coefficient of Q^i q^j in a)
// at i (dq+1) + j, then the beta_{i,j} of b.
template <typename Fn>
void for_each_row(const std::vector<LaurentPoly>& table, int dQ, int dq, Fn&& fn) {
  const std::size_t per = static_cast<std::size_t>((dQ + 1) * (dq + 1));
  const int top = static_cast<int>(table.size()) - 1;
  for (int n = 1; n + 1 <= top; ++n) {
    std::map<int, SparseRow> rows;
    const LaurentPoly& next = table[static_cast<std::size_t>(n + 1)];
    const LaurentPoly& cur = table[static_cast<std::size_t>(n)];
    for (int i = 0; i <= dQ; ++i) {
      for (int j = 0; j <= dq; ++j) {
        const int shift = j + n * i;
        const std::size_t col = static_cast<std::size_t>(i * (dq + 1) + j);
        for (const auto& t : next.terms()) rows[t.exp + shift].push_back({col, t.coeff});
        for (const auto& t : cur.terms()) rows[t.exp + shift].push_back({per + col, t.coeff});
      }
    }
    for (auto& [t, row] : rows)
      if (!fn(row)) return;
  }
}

ModP to_modp(const Rational& r) {
  return ModP::from_integer(r.get_num()) / ModP::from_integer(r.get_den());
}

struct BoundedResult {
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  bool modular_full_rank = false;
  std::vector<std::vector<Rational>> nullspace;
};

BoundedResult solve_bounded(const std::vector<LaurentPoly>& table, int dQ, int dq) {
  BoundedResult out;
  const std::size_t ncols = 2 * static_cast<std::size_t>((dQ + 1) * (dq + 1));
  out.unknowns = static_cast<int>(ncols);
  Echelon<ModP> modular(ncols);
  std::vector<SparseRow> independent;
  for_each_row(table, dQ, dq, [&](const SparseRow& row) {
    ++out.equations;
    std::vector<ModP> dense(ncols);
    for (const auto& [c, v] : row) dense[c] = to_modp(v);
    if (modular.add_row(std::move(dense))) independent.push_back(row);
    return !modular.full_rank();
  });
  if (modular.full_rank()) {
    // A nonzero maximal minor mod p is nonzero over Q.
    out.modular_full_rank = true;
    out.rank = out.unknowns;
    return out;
  }

  // The rows independent mod p are independent over Q; their nullspace
  // contains the true one. Cut it down by imposing every row exactly.
  Echelon<Rational> sub(ncols);
  for (const auto& row : independent) {
    std::vector<Rational> dense(ncols);
    for (const auto& [c, v] : row) dense[c] = v;
    sub.add_row(std::move(dense));
  }
  const auto candidates = sub.nullspace();
  Echelon<Rational> restrict_(candidates.size());
  for_each_row(table, dQ, dq, [&](const SparseRow& row) {
    std::vector<Rational> w(candidates.size());
    for (std::size_t m = 0; m < candidates.size(); ++m)
      for (const auto& [c, v] : row) w[m] += v * candidates[m][c];
    restrict_.add_row(std::move(w));
    return !restrict_.full_rank();
  });
  for (const auto& combo : restrict_.nullspace()) {
    std::vector<Rational> v(ncols);
    for (std::size_t m = 0; m < candidates.size(); ++m)
      if (combo[m] != 0)
        for (std::size_t c = 0; c < ncols; ++c) v[c] += combo[m] * candidates[m][c];
    out.nullspace.push_back(std::move(v));
  }
  out.rank = out.unknowns - static_cast<int>(out.nullspace.size());
  return out;
}

NormalizedOp operator_from(const std::vector<Rational>& v, int dQ, int dq) {
  Integer scale = 1;
  for (const auto& x : v)
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
  const std::size_t per = static_cast<std::size_t>((dQ + 1) * (dq + 1));
  std::vector<BiPoly::Term> a, b;
  for (int i = 0; i <= dQ; ++i) {
    for (int j = 0; j <= dq; ++j) {
      const std::size_t col = static_cast<std::size_t>(i * (dq + 1) + j);
      const auto key = BiPoly::pack({j, i});
      Rational ca = v[col] * scale, cb = v[per + col] * scale;
      if (ca != 0) a.push_back({key, ca.get_num()});
      if (cb != 0) b.push_back({key, cb.get_num()});
    }
  }
  return normalize(OreOp({RatFun(BiPoly::from_terms(std::move(b))),
                          RatFun(BiPoly::from_terms(std::move(a)))}));
}

}  // namespace

NoOrder1Certificate no_order1_annihilator(const std::vector<LaurentPoly>& table,
                                          int deg_Q_max, int deg_q_max) {
  if (deg_Q_max < 0 || deg_q_max < 0)
    throw std::invalid_argument("degree bounds must be nonnegative");
  const int n_values = static_cast<int>(table.size()) - 1;
  if (n_values - 1 < 2 * (deg_Q_max + 1) + 4)
    throw std::invalid_argument(
        "table too short: need N - 1 >= 2 (deg_Q + 1) + 4 relations, have N = " +
        std::to_string(n_values));
  NoOrder1Certificate cert;
  cert.deg_Q = deg_Q_max;
  cert.deg_q = deg_q_max;
  cert.table_size = n_values;
  BoundedResult r = solve_bounded(table, deg_Q_max, deg_q_max);
  cert.unknowns = r.unknowns;
  cert.equations = r.equations;
  cert.rank = r.rank;
  cert.nullity = r.unknowns - r.rank;
  cert.method = r.modular_full_rank ? "rank mod p" : "exact";
  if (cert.nullity == 0) return cert;

  for (int dQ = 0; dQ <= deg_Q_max; ++dQ) {
    for (int dq = 0; dq <= deg_q_max; ++dq) {
      BoundedResult small = solve_bounded(table, dQ, dq);
      if (small.nullspace.empty()) continue;
      cert.recovered = operator_from(small.nullspace.front(), dQ, dq);
      return cert;
    }
  }
  throw AlgebraError("positive nullity but no annihilator recovered");
}

FactorCheck factor_check(const CharPoly& p) {
  FactorCheck out;
  const Poly<2> l_minus_1 = Poly<2>::var(CharPoly::kL) - Poly<2>(1);
  auto quotient = divide_exact(p.poly, l_minus_1);
  if (!quotient) return out;
  out.divisible_by_L_minus_1 = true;
  out.quotient_L_degree = quotient->degree(CharPoly::kL);
  return out;
}

AjVerdict aj_verdict(Knot knot, const AjOptions& options) {
  AjVerdict v;
  v.knot = knot;
  v.recursion = find_recursion(term_ratios(knot), options.max_order);
  v.char_poly = characteristic_poly(v.recursion.normalized);
  v.a_polynomial = knot_record(knot).a_polynomial;
  v.essentially_equal = essential_equality(v.char_poly, v.a_polynomial);
  v.lemma31_ok = lemma31_check(v.recursion.normalized);
  const auto table = jones_table(knot, options.table_size);
  v.annihilation = check_annihilation(v.recursion.normalized, table,
                                      options.annihilation_n_max);
  v.no_order1 = no_order1_annihilator(table, options.deg_Q, options.deg_q);
  v.factors = factor_check(v.char_poly);
  return v;
}

}  // namespace aqp
