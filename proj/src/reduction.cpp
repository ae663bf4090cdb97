#include "catmat/reduction.hpp"

#include <string>

#include "catmat/errors.hpp"

namespace catmat {

namespace {

bool duplicates(const HomMatrix& m, std::size_t i, std::size_t j) {
  return m.entries().row(static_cast<Eigen::Index>(i)) ==
             m.entries().row(static_cast<Eigen::Index>(j)) &&
         m.entries().col(static_cast<Eigen::Index>(i)) ==
             m.entries().col(static_cast<Eigen::Index>(j));
}

}  // namespace

std::vector<std::vector<std::size_t>> duplicate_relation(const HomMatrix& m) {
  const auto n = m.order();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) {
      continue;
    }
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < n; ++j) {
      if (!seen[j] && duplicates(m, i, j)) {
        seen[j] = true;
        cls.push_back(j);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Reduction reduce(const HomMatrix& m) {
  const auto classes = duplicate_relation(m);
  ReductionMap map;
  map.reduced_order = classes.size();
  map.class_of.resize(m.order());
  for (std::size_t a = 0; a < classes.size(); ++a) {
    map.representative.push_back(classes[a].front());
    for (auto i : classes[a]) {
      map.class_of[i] = a;
    }
  }
  return {principal_submatrix(m, map.representative), std::move(map)};
}

FiniteCategory inflate(const FiniteCategory& b, const ReductionMap& map) {
  if (b.object_count() != map.reduced_order) {
    throw CardinalityError("category has " + std::to_string(b.object_count()) +
                           " objects but the reduced matrix has order " +
                           std::to_string(map.reduced_order));
  }
  if (map.is_identity()) {
    return b;
  }
  const auto n = map.class_of.size();
  std::vector<Morphism> morphisms;
  // lifted[(i * n + j)][pos] = id of Lift(i, j, beta) with beta = B.hom(c(i), c(j))[pos]
  std::vector<std::vector<MorphId>> lifted(n * n);
  std::vector<MorphId> identities(n);
  std::vector<ObjectCoord> coords(n);
  for (std::size_t i = 0; i < n; ++i) {
    coords[i] = b.coords()[map.class_of[i]];
    for (std::size_t j = 0; j < n; ++j) {
      for (auto beta : b.hom(map.class_of[i], map.class_of[j])) {
        if (i == j && beta == b.identity(map.class_of[i])) {
          identities[i] = morphisms.size();
        }
        lifted[i * n + j].push_back(morphisms.size());
        morphisms.push_back({i, j, label::Lifted{i, j, b.label_of(beta)}});
      }
    }
  }
  // Position of each B-morphism inside its hom-set.
  std::vector<std::size_t> pos(b.morphism_count());
  for (std::size_t x = 0; x < b.object_count(); ++x) {
    for (std::size_t y = 0; y < b.object_count(); ++y) {
      const auto h = b.hom(x, y);
      for (std::size_t p = 0; p < h.size(); ++p) {
        pos[h[p]] = p;
      }
    }
  }
  FiniteCategory out(n, std::move(morphisms), std::move(identities), std::move(coords));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto f_src = b.hom(map.class_of[i], map.class_of[j]);
      for (std::size_t k = 0; k < n; ++k) {
        const auto g_src = b.hom(map.class_of[j], map.class_of[k]);
        for (std::size_t p = 0; p < f_src.size(); ++p) {
          for (std::size_t q = 0; q < g_src.size(); ++q) {
            const auto h = b.compose(g_src[q], f_src[p]);
            const bool closed = h != kNoMorphism &&
                                b.morphism(h).source == map.class_of[i] &&
                                b.morphism(h).target == map.class_of[k];
            const auto lifted_h = closed ? lifted[i * n + k][pos[h]] : kNoMorphism;
            out.set_composite(lifted[j * n + k][q], lifted[i * n + j][p], lifted_h);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace catmat
