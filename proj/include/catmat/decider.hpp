#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catmat/hom_matrix.hpp"
#include "catmat/partition.hpp"
#include "catmat/reduction.hpp"

namespace catmat {

enum class ReasonKind {
  ZeroDiagonal,
  NotAcceptable,
  MultipleUnits,
  UDiagonal,
  UOffDiagonal,
  CrossRow,
  CrossCol,
  CrossQuadrant,
};

std::string_view reason_name(ReasonKind kind);

/// Why a matrix has no category. Class and local indices refer to the
/// partition of the reduced matrix; `objects` are indices of the input
/// matrix (representatives of the reduced objects involved).
struct Reason {
  ReasonKind kind = ReasonKind::ZeroDiagonal;
  std::vector<std::size_t> objects;
  std::size_t lambda = 0, mu = 0;
  std::size_t local_i = 0, local_j = 0;
  /// The violated inequality reads actual >= required.
  Count required = 0, actual = 0;
  std::optional<AcceptabilityFailure> acceptability;
};

/// One line of plain text naming the violated condition.
std::string describe(const Reason& reason);

struct Verdict {
  bool exists = false;
  std::optional<Reason> reason;
  Reduction reduction;
  /// Partition of the reduced matrix, when it could be built.
  std::optional<Partition> partition;
  /// decide_by_submatrices only: the failing index subset.
  std::vector<std::size_t> subset;
};

/// Throws OverflowError if a product of entries does not fit in Count.
Verdict decide(const HomMatrix& m);

enum class ConditionStatus { Pass, Fail, Skipped };

struct ConditionResult {
  std::string id;
  ConditionStatus status = ConditionStatus::Pass;
  std::string details;
  std::optional<Reason> reason;
};

std::string_view status_name(ConditionStatus status);

/// Every condition decide evaluates, including those after the first
/// failure. Conditions that need a partition are skipped when the reduced
/// matrix is not acceptable.
std::vector<ConditionResult> condition_report(const HomMatrix& m);

/// Decides every principal submatrix of size <= 4, smallest subsets first in
/// lexicographic order; on failure `subset` names the first failing one and
/// `reason` is its verdict with objects mapped back to indices of m.
Verdict decide_by_submatrices(const HomMatrix& m);

}  // namespace catmat
