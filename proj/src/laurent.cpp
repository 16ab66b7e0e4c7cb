#include "aqp/laurent.hpp"

#include <algorithm>
#include <map>

#include "aqp/format.hpp"

namespace aqp {

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
  LaurentPoly p;
  if (c != 0) p.terms_.push_back({exp, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const Term& a, const Term& b) { return a.exp < b.exp; });
  LaurentPoly p;
  for (auto& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw AlgebraError("min_exp of zero Laurent polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw AlgebraError("max_exp of zero Laurent polynomial");
  return terms_.back().exp;
}

Rational LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == exp) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exp += k;
  return r;
}

LaurentPoly LaurentPoly::reflected() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->exp, it->coeff});
  return r;
}

bool LaurentPoly::has_integer_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) {
    return t.coeff.get_den() == 1;
  });
}

Rational rational_pow(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw AlgebraError("zero to a negative power");
    return 1 / rational_pow(base, -exp);
  }
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), exp);
  r.canonicalize();
  return r;
}

Rational LaurentPoly::eval(const Rational& q0) const {
  if (q0 == 0 && !terms_.empty() && terms_.front().exp < 0)
    throw AlgebraError("evaluation at q = 0 with negative exponents");
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.coeff * rational_pow(q0, t.exp);
  return sum;
}

Rational LaurentPoly::coeff_sum() const {
  Rational sum = 0;
  for (const auto& t : terms_) sum += t.coeff;
  return sum;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

std::vector<LaurentPoly::Term> merge_terms(
    const std::vector<LaurentPoly::Term>& a,
    const std::vector<LaurentPoly::Term>& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, subtract ? Rational(-b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(a[i].coeff - b[j].coeff)
                            : Rational(a[i].coeff + b[j].coeff);
      if (c != 0) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  terms_ = merge_terms(terms_, o.terms_, true);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  return *this = *this * o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  // Dense accumulation; the values handled here are dense in q anyway.
  std::vector<Rational> acc(static_cast<std::size_t>(hi - lo + 1));
  Rational tmp;
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) {
      mpq_mul(tmp.get_mpq_t(), x.coeff.get_mpq_t(), y.coeff.get_mpq_t());
      auto& slot = acc[static_cast<std::size_t>(x.exp + y.exp - lo)];
      mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), tmp.get_mpq_t());
    }
  LaurentPoly r;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0)
      r.terms_.push_back({lo + static_cast<int>(k), std::move(acc[k])});
  return r;
}

LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
  if (c == 0) return {};
  LaurentPoly r = p;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].exp != b.terms_[i].exp ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    if (t.exp != 0) {
      mono = "q";
      if (t.exp != 1) mono += "^" + std::to_string(t.exp);
    }
    out += format_rational_term(t.coeff, mono, first);
    first = false;
  }
  return out;
}

}  // namespace aqp
