#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "aqp/ore.hpp"
#include "aqp/qseries.hpp"

namespace aqp {

/// Published reference outputs of the trefoil and figure-eight runs, kept as
/// literal text in the parser grammar.
struct ReferenceRun {
  /// Homogeneous recursion in backward shifts: entry k = (num, den) of the
  /// coefficient of SUM[n - d + k], with Q = q^n.
  std::vector<std::pair<std::string_view, std::string_view>> backward;
  /// Factored characteristic rational function (num, den) in L, M.
  std::pair<std::string_view, std::string_view> char_function;
};

const ReferenceRun& reference_run(Knot knot);

/// The backward operator rewritten in forward shifts and normalized.
NormalizedOp reference_operator(Knot knot);

/// Numerator of the reference characteristic function.
CharPoly reference_char_numerator(Knot knot);

}  // namespace aqp
