#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "catmat/hom_matrix.hpp"

namespace catmat {

/// Structured morphism names. Object coordinates are (class, local index)
/// pairs of the partition the witness was built from; local index 0 is the
/// basepoint of a U class.
namespace label {

/// Identity of object (cls, i).
struct Identity {
  std::size_t cls = 0, i = 0;
  auto operator<=>(const Identity&) const = default;
};

/// Within a U class: (cls, i) -> (cls, j) factoring through the basepoint,
/// 1 <= u <= a(i), 1 <= v <= b(j).
struct Pair {
  std::size_t cls = 0, i = 0, j = 0;
  Count u = 1, v = 1;
  auto operator<=>(const Pair&) const = default;
};

/// The single non-identity baseline morphism (cls, i) -> (cls, j) of a V class.
struct Collapsed {
  std::size_t cls = 0, i = 0, j = 0;
  auto operator<=>(const Collapsed&) const = default;
};

/// Parts of Hom(lam^i, mu^j) for lam > mu. With both classes U:
///   Base  - factors through both basepoints, |Hom(lam^0, mu^0)| labels;
///   Row   - factors through mu^0 only, |Hom(lam^i, mu^0)| - |Hom(lam^0, mu^0)|;
///   Col   - factors through lam^0 only, |Hom(lam^0, mu^j)| - |Hom(lam^0, mu^0)|;
///   Extra - the remainder.
/// When one side is a V class only the other side's basepoint exists and the
/// morphisms factoring through it are all tagged Base.
enum class CrossPart { Base, Row, Col, Extra };

struct Cross {
  CrossPart part = CrossPart::Base;
  std::size_t lam = 0, i = 0, mu = 0, j = 0;
  Count k = 1;
  auto operator<=>(const Cross&) const = default;
};

/// Surplus within-class morphism (cls, i) -> (cls, j), 1 <= k.
struct Pad {
  std::size_t cls = 0, i = 0, j = 0;
  Count k = 1;
  auto operator<=>(const Pad&) const = default;
};

/// Copy (source, target, inner) of a morphism of a reduced category.
struct Lifted {
  std::size_t source = 0, target = 0;
  std::string inner;
  auto operator<=>(const Lifted&) const = default;
};

/// Any other name, e.g. from a hand-written certificate or the oracle.
struct Opaque {
  std::string name;
  auto operator<=>(const Opaque&) const = default;
};

}  // namespace label

using MorphismLabel = std::variant<label::Identity, label::Pair, label::Collapsed, label::Cross,
                                   label::Pad, label::Lifted, label::Opaque>;

/// Canonical rendering, e.g. "Pair(0,1,1,2,1)" or "CrossRow(0,1,1,0,2)".
std::string to_string(const MorphismLabel& label);

/// Inverse of to_string; anything unrecognised becomes label::Opaque.
MorphismLabel parse_label(std::string_view text);

std::string_view part_name(label::CrossPart part);

}  // namespace catmat
