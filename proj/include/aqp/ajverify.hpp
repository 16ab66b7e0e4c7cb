#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aqp/laurent.hpp"
#include "aqp/ore.hpp"
#include "aqp/qseries.hpp"
#include "aqp/telescope.hpp"

namespace aqp {

/// Reference A-polynomial of a knot, kept as the literal text it was
/// transcribed from and in parsed form.
struct KnotRecord {
  Knot knot;
  std::string_view a_polynomial_text;
  CharPoly a_polynomial;
};

const KnotRecord& knot_record(Knot knot);

/// epsilon(P) with E -> L and Q -> M^2, integer content removed and the
/// leading term made positive.
CharPoly characteristic_poly(const NormalizedOp& op);

/// Equality up to a power of L and a nonzero rational function of M alone.
/// Throws on a zero argument.
bool essential_equality(const CharPoly& a, const CharPoly& b);

/// At q = 1, Q = 1 the operator must vanish at E = 1, i.e. its coefficients
/// sum to zero.
bool lemma31_check(const NormalizedOp& op);

struct AnnihilationCheck {
  bool ok = true;
  int n_checked = 0;
  std::optional<int> first_failure;
};

/// Checks sum_k b_k(q, q^n) J(n+k) == 0 for n = 1..n_max as Laurent
/// polynomials. table[n] = J(n), index 0 unused.
AnnihilationCheck check_annihilation(const NormalizedOp& op,
                                     const std::vector<LaurentPoly>& table,
                                     int n_max);

struct NoOrder1Certificate {
  int deg_Q = 0;
  int deg_q = 0;
  int table_size = 0;
  int unknowns = 0;
  int equations = 0;
  int rank = 0;
  int nullity = 0;
  /// "rank mod p" when full rank modulo the prime settles the question,
  /// otherwise "exact".
  std::string method;
  /// Smallest-degree order-1 annihilator when the nullity is positive.
  std::optional<NormalizedOp> recovered;
};

inline constexpr int kNoOrder1DegQ = 8;
inline constexpr int kNoOrder1Degq = 16;
inline constexpr int kTableSize = 40;

/// Decides whether a(q,Q) J(n+1) + b(q,Q) J(n) = 0 for n = 1..N-1 has a
/// nonzero solution with deg_Q <= deg_Q_max and deg_q <= deg_q_max, where
/// N = table.size() - 1. Requires N - 1 >= 2 (deg_Q_max + 1) + 4.
NoOrder1Certificate no_order1_annihilator(const std::vector<LaurentPoly>& table,
                                          int deg_Q_max, int deg_q_max);

struct FactorCheck {
  bool divisible_by_L_minus_1 = false;
  int quotient_L_degree = -1;
};

/// Splits off L - 1 and reports the L-degree of the cofactor.
FactorCheck factor_check(const CharPoly& p);

struct AjOptions {
  int max_order = kDefaultMaxOrder;
  int table_size = kTableSize;
  int annihilation_n_max = 30;
  int deg_Q = kNoOrder1DegQ;
  int deg_q = kNoOrder1Degq;
};

struct AjVerdict {
  Knot knot;
  Recursion recursion;
  CharPoly char_poly;
  CharPoly a_polynomial;
  bool essentially_equal = false;
  bool lemma31_ok = false;
  AnnihilationCheck annihilation;
  NoOrder1Certificate no_order1;
  FactorCheck factors;

  bool passed() const {
    return essentially_equal && lemma31_ok && annihilation.ok;
  }
};

AjVerdict aj_verdict(Knot knot, const AjOptions& options = {});

}  // namespace aqp
