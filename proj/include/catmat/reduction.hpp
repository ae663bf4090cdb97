#pragma once

#include <cstddef>
#include <vector>

#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"

namespace catmat {

/// Original index i belongs to class class_of[i]; class a is represented by
/// its smallest member representative[a], and representatives increase
/// with a.
struct ReductionMap {
  std::size_t reduced_order = 0;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> representative;

  bool is_identity() const { return reduced_order == class_of.size(); }
  bool operator==(const ReductionMap&) const = default;
};

struct Reduction {
  HomMatrix reduced;
  ReductionMap map;
};

/// Classes of indices with identical rows and identical columns, each sorted,
/// ordered by smallest member.
std::vector<std::vector<std::size_t>> duplicate_relation(const HomMatrix& m);

/// reduced(a, b) = m(representative[a], representative[b]).
Reduction reduce(const HomMatrix& m);

/// Category on the original objects: Hom(x_i, x_j) holds one copy
/// Lift(i, j, beta) of each beta in B(c(i), c(j)), composed through B's
/// table. Returns B unchanged for an identity map. Throws CardinalityError
/// when B's object count differs from the reduced order.
FiniteCategory inflate(const FiniteCategory& b, const ReductionMap& map);

}  // namespace catmat
