#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "aqp/ratfun.hpp"

namespace aqp {

/// Element of Z/pZ for the Mersenne prime p = 2^61 - 1.
class ModP {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  ModP() = default;
  explicit ModP(std::uint64_t v) : v_(v % kPrime) {}
  static ModP from_integer(const Integer& z) {
    return ModP(mpz_fdiv_ui(z.get_mpz_t(), kPrime));
  }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend ModP operator+(ModP a, ModP b) { return ModP(a.v_ + b.v_); }
  friend ModP operator-(ModP a, ModP b) { return ModP(a.v_ + kPrime - b.v_); }
  friend ModP operator*(ModP a, ModP b) {
    unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    return ModP(lo + hi);
  }
  ModP operator-() const { return ModP(kPrime - v_); }
  ModP inverse() const {
    ModP result(1), base = *this;
    std::uint64_t e = kPrime - 2;
    while (e) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }
  friend ModP operator/(ModP a, ModP b) { return a * b.inverse(); }
  friend bool operator==(ModP a, ModP b) { return a.v_ == b.v_; }

 private:
  std::uint64_t v_ = 0;
};

inline bool field_is_zero(const ModP& x) { return x.is_zero(); }
inline bool field_is_zero(const Rational& x) { return x == 0; }
template <int N>
bool field_is_zero(const RationalFunction<N>& x) { return x.is_zero(); }

/// Incremental row echelon form over a field. Each stored row has a unit
/// pivot and zeros in the pivot columns of the rows stored before it.
template <typename F>
class Echelon {
 public:
  explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t rank() const { return rows_.size(); }
  bool full_rank() const { return rows_.size() == ncols_; }

  /// Reduces the row against the stored rows; keeps it if independent.
  bool add_row(std::vector<F> row) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::size_t p = pivots_[r];
      if (field_is_zero(row[p])) continue;
      const F factor = row[p];
      for (std::size_t c = p; c < ncols_; ++c)
        if (!field_is_zero(rows_[r][c])) row[c] = row[c] - factor * rows_[r][c];
    }
    std::size_t p = 0;
    while (p < ncols_ && field_is_zero(row[p])) ++p;
    if (p == ncols_) return false;
    const F inv = F(1) / row[p];
    for (std::size_t c = p; c < ncols_; ++c)
      if (!field_is_zero(row[c])) row[c] = row[c] * inv;
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  /// Basis of the right nullspace {x : A x = 0}, one vector per free column
  /// in increasing column order.
  std::vector<std::vector<F>> nullspace() const {
    // Back-substitute to reduced form, processing pivots right to left.
    std::vector<std::vector<F>> rref = rows_;
    std::vector<std::size_t> order(rref.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
      const std::size_t r = order[oi];
      const std::size_t p = pivots_[r];
      for (std::size_t other = 0; other < rref.size(); ++other) {
        if (other == r || field_is_zero(rref[other][p])) continue;
        const F factor = rref[other][p];
        for (std::size_t c = 0; c < ncols_; ++c)
          if (!field_is_zero(rref[r][c]))
            rref[other][c] = rref[other][c] - factor * rref[r][c];
      }
    }
    std::vector<bool> is_pivot(ncols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < ncols_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<F> v(ncols_, F(0));
      v[f] = F(1);
      for (std::size_t r = 0; r < rref.size(); ++r)
        if (!field_is_zero(rref[r][f])) v[pivots_[r]] = -rref[r][f];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t ncols_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace aqp
