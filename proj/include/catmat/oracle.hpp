#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"

namespace catmat {

enum class OracleResult { Yes, No, Unknown };

std::string_view result_name(OracleResult result);

struct SearchBudget {
  std::uint64_t max_assignments = 10'000'000;
};

struct OracleOutcome {
  OracleResult result = OracleResult::Unknown;
  std::uint64_t assignments = 0;
  /// On Yes: the table found, morphisms named "m{x}.{y}.{k}" with k = 0 the
  /// identity on the diagonal.
  std::optional<FiniteCategory> category;
};

/// Backtracking search for a composition table realising m, independent of
/// the decision criterion. Cells whose arguments include an identity are
/// fixed; the others are chosen most-constrained first (ties by cell
/// index) with associativity checked on every triple as soon as it closes.
/// Returns Unknown when the assignment budget runs out, or up front when
/// the table has more cells than the budget allows.
OracleOutcome oracle_decide(const HomMatrix& m, SearchBudget budget = {});

}  // namespace catmat
