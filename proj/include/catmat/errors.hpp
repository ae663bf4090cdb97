#pragma once

#include <stdexcept>
#include <string>

namespace catmat {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed token or document while reading a matrix or certificate.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Ragged or non-square matrix input.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Object or morphism index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An intermediate count does not fit in `Count`.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// The reachability relation of the matrix is not a preorder.
class NotAcceptableError : public Error {
 public:
  using Error::Error;
};

/// Hom-set sizes disagree with the matrix they are supposed to realise.
class CardinalityError : public Error {
 public:
  using Error::Error;
};

/// A part of a hom-set decomposition came out negative.
class CountError : public Error {
 public:
  using Error::Error;
};

class NotComposableError : public Error {
 public:
  using Error::Error;
};

/// A witness was requested for a matrix that has no category.
class RejectedError : public Error {
 public:
  using Error::Error;
};

/// A certificate document does not follow the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive verification would exceed the configured triple budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace catmat
