#pragma once

// Straight-line restatement of the category axioms over every triple of
// morphism ids. Deliberately naive: no hom-set indexing, no early exits
// shared with verify_category.

#include "catmat/errors.hpp"
#include "catmat/finite_category.hpp"
#include "catmat/hom_matrix.hpp"

namespace catmat::testing {

inline MorphId naive_compose(const FiniteCategory& c, MorphId g, MorphId f) {
  if (c.morphism(f).target != c.morphism(g).source) {
    return kNoMorphism;
  }
  return c.compose(g, f);
}

inline bool naive_is_category(const FiniteCategory& c, const HomMatrix& m) {
  const auto total = c.morphism_count();
  if (c.object_count() != m.order()) {
    return false;
  }
  std::vector<Count> sizes(m.order() * m.order(), 0);
  for (MorphId f = 0; f < total; ++f) {
    ++sizes[c.morphism(f).source * m.order() + c.morphism(f).target];
  }
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (sizes[i * m.order() + j] != m(i, j)) {
        return false;
      }
    }
  }
  for (MorphId f = 0; f < total; ++f) {
    const auto& mf = c.morphism(f);
    if (naive_compose(c, c.identity(mf.target), f) != f ||
        naive_compose(c, f, c.identity(mf.source)) != f) {
      return false;
    }
  }
  for (MorphId f = 0; f < total; ++f) {
    for (MorphId g = 0; g < total; ++g) {
      if (c.morphism(f).target != c.morphism(g).source) {
        continue;
      }
      const auto gf = naive_compose(c, g, f);
      if (gf == kNoMorphism || c.morphism(gf).source != c.morphism(f).source ||
          c.morphism(gf).target != c.morphism(g).target) {
        return false;
      }
    }
  }
  for (MorphId f = 0; f < total; ++f) {
    for (MorphId g = 0; g < total; ++g) {
      for (MorphId h = 0; h < total; ++h) {
        if (c.morphism(f).target != c.morphism(g).source ||
            c.morphism(g).target != c.morphism(h).source) {
          continue;
        }
        if (naive_compose(c, h, naive_compose(c, g, f)) !=
            naive_compose(c, naive_compose(c, h, g), f)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace catmat::testing
