#pragma once

#include <stdexcept>
#include <string>

namespace framedhom {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a documented invariant; the message names it.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two inputs were built for different surfaces.
class SpecMismatch : public Error {
 public:
  using Error::Error;
};

class NotSymplectic : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class MissingArcData : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Some kappa_i is odd, so no classical spin structure exists.
class SomeKappaOdd : public Error {
 public:
  using Error::Error;
};

class PointPushOnArcs : public Error {
 public:
  using Error::Error;
};

/// The transvection is not the Sp-part of any kernel element.
class NoLiftExists : public Error {
 public:
  using Error::Error;
};

class ArfMismatch : public Error {
 public:
  using Error::Error;
};

class QVectorMismatch : public Error {
 public:
  using Error::Error;
};

/// Exhaustive mod-2 routines refuse surfaces beyond their budget.
class GenusTooLarge : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace framedhom
