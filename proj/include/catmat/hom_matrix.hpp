#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace catmat {

/// Number of morphisms between two objects.
using Count = std::uint64_t;

using CountMatrix = Eigen::Matrix<Count, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct ObjectId {
  std::size_t index = 0;

  auto operator<=>(const ObjectId&) const = default;
};

/// Square matrix of hom-set cardinalities: entry (i, j) is |Hom(x_i, x_j)|.
///
/// The empty 0x0 matrix is a valid value (the empty category).
class HomMatrix {
 public:
  HomMatrix() = default;

  /// Throws ShapeError unless `entries` is square.
  explicit HomMatrix(CountMatrix entries);

  /// Row-wise literal; throws ShapeError on ragged or non-square input.
  HomMatrix(std::initializer_list<std::initializer_list<Count>> rows);

  std::size_t order() const noexcept { return static_cast<std::size_t>(entries_.rows()); }

  Count operator()(std::size_t i, std::size_t j) const {
    return entries_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  /// Bounds-checked access; throws IndexError.
  Count at(ObjectId from, ObjectId to) const;

  const CountMatrix& entries() const noexcept { return entries_; }

  /// Sum of all entries; throws OverflowError.
  Count total() const;

  friend bool operator==(const HomMatrix& lhs, const HomMatrix& rhs);

 private:
  CountMatrix entries_;
};

/// Reads either the plain whitespace/newline form or the JSON form
/// `{"n": int, "entries": [[...], ...]}`. Blank lines and lines starting
/// with '#' are ignored in the plain form.
///
/// Throws ParseError on malformed tokens and ShapeError on ragged rows.
HomMatrix parse_matrix(std::string_view text);

/// Entries M[keep[a]][keep[b]]; `keep` must be strictly increasing.
HomMatrix principal_submatrix(const HomMatrix& m, std::span<const std::size_t> keep);

/// result(i, j) = m(sigma[i], sigma[j]); `sigma` must be a permutation.
HomMatrix permute(const HomMatrix& m, std::span<const std::size_t> sigma);

HomMatrix transpose(const HomMatrix& m);

/// Plain-text rendering accepted back by parse_matrix.
std::string format_matrix(const HomMatrix& m);

std::ostream& operator<<(std::ostream& os, const HomMatrix& m);

namespace checked {

Count add(Count a, Count b);
Count mul(Count a, Count b);

}  // namespace checked

}  // namespace catmat
