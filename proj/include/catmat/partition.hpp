#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "catmat/hom_matrix.hpp"

namespace catmat {

/// U: the class has an object whose only endomorphism is its identity.
/// V: every object of the class has at least two endomorphisms.
enum class ClassKind { U, V };

char kind_letter(ClassKind kind);

/// Position of an object inside its class. Local index 0 is the basepoint of
/// a U class; the other objects are numbered from 1.
struct ObjectCoord {
  std::size_t cls = 0;
  std::size_t local = 0;

  auto operator<=>(const ObjectCoord&) const = default;
};

struct AcceptabilityFailure {
  enum class Kind { Reflexivity, Transitivity };
  Kind kind = Kind::Reflexivity;
  /// Reflexivity: i. Transitivity: M[i][j] >= 1, M[j][k] >= 1, M[i][k] = 0.
  std::size_t i = 0, j = 0, k = 0;

  bool operator==(const AcceptabilityFailure&) const = default;
};

/// True iff M[i][j] >= 1.
bool reaches(const HomMatrix& m, ObjectId i, ObjectId j);

/// First reflexivity failure by index, else the lexicographically first
/// failing triple, else nullopt.
std::optional<AcceptabilityFailure> check_acceptable(const HomMatrix& m);

struct UnitConflict {
  std::size_t cls = 0;
  std::vector<std::size_t> objects;  // every diagonal-1 object of the class
};

struct Partition {
  /// Members of each class in local-index order (basepoint first for U).
  /// Classes are numbered by their smallest member.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<ClassKind> kinds;
  std::vector<std::optional<std::size_t>> basepoints;
  /// Per object.
  std::vector<ObjectCoord> coords;
  /// (lam, mu) with lam > mu: Hom(lam, mu) nonempty, Hom(mu, lam) empty.
  /// Sorted lexicographically.
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<UnitConflict> unit_conflicts;

  std::size_t class_count() const { return classes.size(); }
  bool above(std::size_t lam, std::size_t mu) const;
  /// Object with coordinates (cls, local).
  std::size_t object(std::size_t cls, std::size_t local) const;
  /// Local indices used by the class, e.g. 0..k-1 for U and 1..k for V.
  std::size_t first_local(std::size_t cls) const { return kinds[cls] == ClassKind::U ? 0 : 1; }
  std::size_t end_local(std::size_t cls) const { return first_local(cls) + classes[cls].size(); }
  /// Covering pairs of `order`.
  std::vector<std::pair<std::size_t, std::size_t>> hasse() const;
};

/// Throws NotAcceptableError when check_acceptable fails. Several
/// diagonal-1 objects in one class are recorded in unit_conflicts; the
/// smallest of them becomes the basepoint.
Partition build_partition(const HomMatrix& m);

}  // namespace catmat
