#pragma once

#include <cstddef>
#include <vector>

#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"
#include "catmat/morphism_label.hpp"
#include "catmat/partition.hpp"

namespace catmat {

/// a(cls^i) = M(cls^i, cls^0) and b(cls^j) = M(cls^0, cls^j); both are 1
/// for V classes and at the basepoint.
Count a_of(const Partition& p, const HomMatrix& m, std::size_t cls, std::size_t local);
Count b_of(const Partition& p, const HomMatrix& m, std::size_t cls, std::size_t local);

/// Everything compose needs: a reduced matrix accepted by decide and its
/// partition.
struct WitnessContext {
  const HomMatrix& matrix;
  const Partition& partition;
};

/// Labels of Hom(x, y) at index x * n + y, identity first on the diagonal.
/// Throws CountError if some part size would be negative.
std::vector<std::vector<MorphismLabel>> build_hom_labels(const HomMatrix& m, const Partition& p);

/// g after f for labels produced by build_hom_labels. Throws
/// NotComposableError when the target of f is not the source of g.
MorphismLabel compose(const MorphismLabel& g, const MorphismLabel& f, const WitnessContext& ctx);

/// Category on an accepted reduced matrix, coordinates taken from `p`.
FiniteCategory build_reduced_witness(const HomMatrix& reduced, const Partition& p);

/// Witness for any accepted matrix: built on the reduced matrix and
/// inflated. Throws RejectedError when decide says no.
FiniteCategory build_witness(const HomMatrix& m);

}  // namespace catmat
