#pragma once

#include <stdexcept>
#include <string>

namespace cfrag {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result's spectral tail exceeds the tolerance: the grid is too coarse.
class AliasingError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Invalid interval, cover or cutoff geometry.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// No cutoff with values in [0, 1] reaches the requested integral.
class MassError : public Error {
 public:
  using Error::Error;
};

/// Element is outside the neighbourhood of the identity a map is defined on.
class NeighbourhoodError : public Error {
 public:
  using Error::Error;
};

/// A constructed diffeomorphism would fail to be orientation preserving.
class DerivativeError : public Error {
 public:
  using Error::Error;
};

/// Loop sample outside the principal-logarithm domain.
class BranchError : public Error {
 public:
  using Error::Error;
};

/// Verma computation would leave the truncated module.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Malformed command-line operand or input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cfrag
