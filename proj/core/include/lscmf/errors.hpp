#pragma once

#include <stdexcept>
#include <string>

namespace lscmf {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A mathematical argument lies outside the domain of the operation
/// (e.g. an aspect ratio outside (0,1], a subcritical singular value).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Structurally invalid input: non-finite entries, dimension mismatches,
/// non-unit vectors where unit vectors are required.
class InputError : public Error {
public:
  using Error::Error;
};

/// Input that is formally valid but carries no usable information
/// (e.g. an all-zero singular value vector).
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// Problems with the view-graph layout or the matrix collection attached
/// to it. The kind is kept machine-readable so a front end can explain
/// each failure distinctly.
class LayoutError : public Error {
public:
  enum class Kind {
    unknown_view,
    invalid_edge,
    duplicate_edge,
    missing_matrix,
    duplicate_matrix,
    shape_mismatch,
    disconnected,
  };

  LayoutError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

private:
  Kind kind_;
};

/// File parsing / serialization failures.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace lscmf
