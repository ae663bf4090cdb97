#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catmat/morphism_label.hpp"
#include "catmat/partition.hpp"

namespace catmat {

using MorphId = std::size_t;
inline constexpr MorphId kNoMorphism = std::numeric_limits<MorphId>::max();

struct Morphism {
  std::size_t source = 0;
  std::size_t target = 0;
  MorphismLabel label;
};

/// Objects, labelled hom-sets, chosen identities and a composition table.
///
/// The table is stored densely per composable pair and may be partial while
/// it is being filled; nothing here checks the axioms (see verify_category).
class FiniteCategory {
 public:
  FiniteCategory() = default;

  /// Hom-sets keep the relative order of `morphisms`. Throws IndexError on
  /// out-of-range objects and Error on duplicate labels or on an identity
  /// that is not an endomorphism of its object.
  FiniteCategory(std::size_t objects, std::vector<Morphism> morphisms,
                 std::vector<MorphId> identities, std::vector<ObjectCoord> coords = {});

  std::size_t object_count() const { return objects_; }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const Morphism& morphism(MorphId f) const { return morphisms_.at(f); }
  std::span<const MorphId> hom(std::size_t x, std::size_t y) const;
  /// Morphisms with source x, in id order.
  std::span<const MorphId> out_of(std::size_t x) const { return out_.at(x); }
  MorphId identity(std::size_t x) const { return identities_.at(x); }
  bool is_identity(MorphId f) const;
  const std::vector<ObjectCoord>& coords() const { return coords_; }

  /// g after f. kNoMorphism if the entry is unset; NotComposableError unless
  /// target(f) == source(g).
  MorphId compose(MorphId g, MorphId f) const;
  void set_composite(MorphId g, MorphId f, MorphId h);

  std::optional<MorphId> find(const MorphismLabel& label) const;
  std::string label_of(MorphId f) const { return to_string(morphisms_.at(f).label); }

  friend bool operator==(const FiniteCategory& lhs, const FiniteCategory& rhs);

 private:
  std::size_t cell(MorphId g, MorphId f) const;

  std::size_t objects_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<MorphId> identities_;
  std::vector<ObjectCoord> coords_;
  std::vector<std::vector<MorphId>> homs_;  // x * n + y
  std::vector<std::vector<MorphId>> out_;
  std::vector<std::size_t> out_pos_;  // position of f in out_[source f]
  std::vector<std::size_t> offset_;   // first cell of f in table_
  std::vector<MorphId> table_;
  std::map<MorphismLabel, MorphId> by_label_;
};

}  // namespace catmat
