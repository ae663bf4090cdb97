#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"

namespace catmat {

struct CardinalityMismatch {
  std::size_t i = 0, j = 0;
  Count expected = 0, actual = 0;
};

struct IdentityFailure {
  std::size_t object = 0;
  MorphId morphism = 0;
  /// true: id o f != f; false: f o id != f.
  bool left = true;
};

/// Composite of (g, f) missing or outside Hom(source f, target g).
struct ClosureFailure {
  MorphId g = 0, f = 0;
  MorphId result = kNoMorphism;
};

struct AssociativityFailure {
  MorphId h = 0, g = 0, f = 0;
  MorphId left = 0;   // h o (g o f)
  MorphId right = 0;  // (h o g) o f
};

struct VerificationReport {
  bool passed = true;
  std::vector<CardinalityMismatch> cardinality_mismatches;
  std::vector<IdentityFailure> identity_failures;
  std::vector<ClosureFailure> closure_failures;
  std::vector<AssociativityFailure> associativity_failures;
  /// Composable triples, identities included.
  std::uint64_t triples_checked = 0;
  /// Failures found, including those past the cap.
  std::uint64_t failure_count = 0;
};

struct VerifyOptions {
  std::size_t failure_cap = 32;
  std::uint64_t triple_budget = 100'000'000;
};

/// Number of composable triples (h, g, f) of c.
std::uint64_t count_triples(const FiniteCategory& c);

/// Exhaustive check of hom-set sizes against m, identity laws, closure and
/// associativity. Each failure list keeps at most failure_cap entries.
/// Throws BudgetError if count_triples exceeds triple_budget.
VerificationReport verify_category(const FiniteCategory& c, const HomMatrix& m,
                                   const VerifyOptions& options = {});

}  // namespace catmat
