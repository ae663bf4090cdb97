#include "catmat/finite_category.hpp"

#include <string>

#include "catmat/errors.hpp"

namespace catmat {

FiniteCategory::FiniteCategory(std::size_t objects, std::vector<Morphism> morphisms,
                               std::vector<MorphId> identities, std::vector<ObjectCoord> coords)
    : objects_(objects),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)),
      coords_(std::move(coords)),
      homs_(objects * objects),
      out_(objects),
      out_pos_(morphisms_.size()),
      offset_(morphisms_.size()) {
  if (coords_.empty()) {
    coords_.resize(objects);
    for (std::size_t x = 0; x < objects; ++x) {
      coords_[x] = {x, 0};
    }
  }
  if (coords_.size() != objects || identities_.size() != objects) {
    throw IndexError("need one identity and one coordinate per object");
  }
  for (MorphId f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    if (m.source >= objects || m.target >= objects) {
      throw IndexError("morphism " + to_string(m.label) + " has an endpoint out of range");
    }
    if (!by_label_.emplace(m.label, f).second) {
      throw Error("duplicate morphism label " + to_string(m.label));
    }
    homs_[m.source * objects + m.target].push_back(f);
    out_pos_[f] = out_[m.source].size();
    out_[m.source].push_back(f);
  }
  for (std::size_t x = 0; x < objects; ++x) {
    const auto id = identities_[x];
    if (id >= morphisms_.size() || morphisms_[id].source != x || morphisms_[id].target != x) {
      throw Error("identity of object " + std::to_string(x) + " is not an endomorphism of it");
    }
  }
  std::size_t cells = 0;
  for (MorphId f = 0; f < morphisms_.size(); ++f) {
    offset_[f] = cells;
    cells += out_[morphisms_[f].target].size();
  }
  table_.assign(cells, kNoMorphism);
}

std::span<const MorphId> FiniteCategory::hom(std::size_t x, std::size_t y) const {
  if (x >= objects_ || y >= objects_) {
    throw IndexError("object out of range");
  }
  return homs_[x * objects_ + y];
}

bool FiniteCategory::is_identity(MorphId f) const {
  const auto& m = morphisms_.at(f);
  return m.source == m.target && identities_[m.source] == f;
}

std::size_t FiniteCategory::cell(MorphId g, MorphId f) const {
  if (g >= morphisms_.size() || f >= morphisms_.size()) {
    throw IndexError("morphism id out of range");
  }
  if (morphisms_[f].target != morphisms_[g].source) {
    throw NotComposableError(to_string(morphisms_[g].label) + " after " +
                             to_string(morphisms_[f].label));
  }
  return offset_[f] + out_pos_[g];
}

MorphId FiniteCategory::compose(MorphId g, MorphId f) const { return table_[cell(g, f)]; }

void FiniteCategory::set_composite(MorphId g, MorphId f, MorphId h) {
  if (h != kNoMorphism && h >= morphisms_.size()) {
    throw IndexError("composite id out of range");
  }
  table_[cell(g, f)] = h;
}

std::optional<MorphId> FiniteCategory::find(const MorphismLabel& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool operator==(const FiniteCategory& lhs, const FiniteCategory& rhs) {
  if (lhs.objects_ != rhs.objects_ || lhs.identities_ != rhs.identities_ ||
      lhs.coords_ != rhs.coords_ || lhs.table_ != rhs.table_ ||
      lhs.morphisms_.size() != rhs.morphisms_.size()) {
    return false;
  }
  for (MorphId f = 0; f < lhs.morphisms_.size(); ++f) {
    const auto& a = lhs.morphisms_[f];
    const auto& b = rhs.morphisms_[f];
    if (a.source != b.source || a.target != b.target || a.label != b.label) {
      return false;
    }
  }
  return true;
}

}  // namespace catmat
