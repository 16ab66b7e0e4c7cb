#include "aqp/ore.hpp"

#include <utility>

namespace aqp {

RatFun sigma(const RatFun& f, int power) {
  if (power >= 0) return scale_var(f, kQ, kq, power);
  RatFun r = f;
  for (int i = 0; i < -power; ++i) r = scale_var(r, kQ, kq, -1);
  return r;
}

OreOp::OreOp(std::vector<RatFun> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

OreOp::OreOp(const RatFun& scalar) {
  if (!scalar.is_zero()) coeffs_.push_back(scalar);
}

OreOp OreOp::shift(int k) {
  if (k < 0) throw AlgebraError("negative shift power");
  std::vector<RatFun> c(static_cast<std::size_t>(k) + 1);
  c.back() = RatFun(1);
  return OreOp(std::move(c));
}

RatFun OreOp::coeff(int k) const {
  if (k < 0 || k > degree()) return {};
  return coeffs_[static_cast<std::size_t>(k)];
}

const RatFun& OreOp::leading_coeff() const {
  if (coeffs_.empty()) throw AlgebraError("leading coefficient of zero operator");
  return coeffs_.back();
}

void OreOp::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

OreOp OreOp::operator-() const {
  OreOp r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OreOp operator+(const OreOp& a, const OreOp& b) {
  std::vector<RatFun> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k < a.coeffs_.size()) c[k] += a.coeffs_[k];
    if (k < b.coeffs_.size()) c[k] += b.coeffs_[k];
  }
  return OreOp(std::move(c));
}

OreOp operator-(const OreOp& a, const OreOp& b) { return a + (-b); }

OreOp operator*(const OreOp& a, const OreOp& b) { return ore_mul(a, b); }

std::string OreOp::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + coeffs_[k].to_string(kBiNames) + "]";
    if (k == 1) out += "*E";
    if (k > 1) out += "*E^" + std::to_string(k);
  }
  return out;
}

OreOp ore_mul(const OreOp& p, const OreOp& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<RatFun> c(static_cast<std::size_t>(p.degree() + r.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) {
    const RatFun& a = p.coeffs()[static_cast<std::size_t>(i)];
    if (a.is_zero()) continue;
    for (int j = 0; j <= r.degree(); ++j) {
      const RatFun& b = r.coeffs()[static_cast<std::size_t>(j)];
      if (b.is_zero()) continue;
      c[static_cast<std::size_t>(i + j)] += a * sigma(b, i);
    }
  }
  return OreOp(std::move(c));
}

RightDivision right_divide(const OreOp& p, const OreOp& d) {
  if (d.is_zero()) throw AlgebraError("right division by the zero operator");
  OreOp quotient;
  OreOp rem = p;
  const int dd = d.degree();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const int k = rem.degree() - dd;
    RatFun c = rem.leading_coeff() / sigma(d.leading_coeff(), k);
    OreOp term = ore_mul(OreOp(c), OreOp::shift(k));
    quotient = quotient + term;
    OreOp next = rem - ore_mul(term, d);
    if (!next.is_zero() && next.degree() >= rem.degree())
      throw AlgebraError("right division failed to reduce the degree");
    rem = std::move(next);
  }
  return {std::move(quotient), std::move(rem)};
}

OreOp make_monic(const OreOp& p) {
  if (p.is_zero()) return p;
  return ore_mul(OreOp(p.leading_coeff().inverse()), p);
}

OreOp gcrd(const OreOp& p, const OreOp& r) {
  if (p.is_zero() && r.is_zero()) throw AlgebraError("gcrd of two zero operators");
  OreOp a = make_monic(p), b = make_monic(r);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    OreOp rem = right_divide(a, b).remainder;
    a = std::move(b);
    b = make_monic(rem);
  }
  return a;
}

OreOp NormalizedOp::to_ore() const {
  std::vector<RatFun> c;
  c.reserve(coeffs.size());
  for (const auto& b : coeffs) c.emplace_back(b);
  return OreOp(std::move(c));
}

std::string NormalizedOp::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs[k].to_string(kBiNames) + ")";
    if (k == 1) out += "*E";
    if (k > 1) out += "*E^" + std::to_string(k);
  }
  return out;
}

NormalizedOp normalize(const OreOp& p) {
  if (p.is_zero()) throw AlgebraError("normalize of the zero operator");
  const auto& pc = p.coeffs();
  std::size_t low = 0;
  while (pc[low].is_zero()) ++low;
  if (low > 0) {
    // Drop the left factor E^low: E^low * sum b_k E^k has coefficients
    // sigma^low(b_k) at k + low.
    std::vector<RatFun> c;
    for (std::size_t k = low; k < pc.size(); ++k)
      c.push_back(sigma(pc[k], -static_cast<int>(low)));
    return normalize(OreOp(std::move(c)));
  }
  BiPoly common_den(1);
  for (const auto& c : p.coeffs())
    if (!c.is_zero()) common_den = lcm(common_den, c.den());
  NormalizedOp out;
  out.coeffs.reserve(p.coeffs().size());
  BiPoly g;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) {
      out.coeffs.emplace_back();
      continue;
    }
    BiPoly b = c.num() * divide_or_throw(common_den, c.den());
    g = g.is_zero() ? b : gcd(g, b);
    out.coeffs.push_back(std::move(b));
  }
  const bool flip = out.coeffs.back().leading_coeff() < 0;
  for (auto& b : out.coeffs) {
    if (b.is_zero()) continue;
    b = divide_or_throw(b, g);
    if (flip) b = -b;
  }
  return out;
}

OreOp make_hom_rec(const OreOp& p, const RatFun& rhs) {
  if (rhs.is_zero())
    throw AlgebraError("relation is already homogeneous (zero right-hand side)");
  OreOp scaled = ore_mul(OreOp(rhs.inverse()), p);
  return ore_mul(OreOp::shift(1) - OreOp(RatFun(1)), scaled);
}

namespace {

NormalizedOp shift_all(const NormalizedOp& op, int power) {
  std::vector<RatFun> c;
  c.reserve(op.coeffs.size());
  for (const auto& b : op.coeffs) c.push_back(sigma(RatFun(b), power));
  return normalize(OreOp(std::move(c)));
}

}  // namespace

NormalizedOp forward_shifts(const NormalizedOp& backward) {
  return shift_all(backward, backward.degree());
}

NormalizedOp backward_shifts(const NormalizedOp& forward) {
  return shift_all(forward, -forward.degree());
}

}  // namespace aqp
