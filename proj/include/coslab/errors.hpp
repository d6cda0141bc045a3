#pragma once

#include <stdexcept>
#include <string>

namespace coslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Order parameter lies on (or within the pole guard of) a family's excluded lattice.
class ExcludedParameter : public Error {
public:
  using Error::Error;
};

/// A gamma function argument hits a pole that cannot be cancelled.
class GammaPole : public Error {
public:
  using Error::Error;
};

/// Degree-specific pole of the numerator of m_{j,alpha} under continuation.
class NumeratorPole : public GammaPole {
public:
  using GammaPole::GammaPole;
};

class UnknownConstant : public Error {
public:
  using Error::Error;
};

/// Direct quadrature requested outside its validated order window.
class QuadratureWindow : public Error {
public:
  using Error::Error;
};

class InsufficientRule : public Error {
public:
  using Error::Error;
};

class GridTooCoarse : public Error {
public:
  using Error::Error;
};

/// Input required to be even (a function on a Grassmannian) has an odd part.
class OddInput : public Error {
public:
  using Error::Error;
};

/// Radial function is not strictly positive, or the body is not origin-symmetric.
class NonPositiveBody : public Error {
public:
  using Error::Error;
};

class BadShapeParams : public Error {
public:
  using Error::Error;
};

/// File or value has a representation the requested operation does not accept.
class RepresentationMismatch : public Error {
public:
  using Error::Error;
};

/// Malformed input file or value.
class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace coslab
