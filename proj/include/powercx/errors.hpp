#pragma once

#include <stdexcept>
#include <string>

namespace powercx {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally broken input: dangling ids, ranks outside -1..k, covers that
/// do not increase rank. Distinct from axiom violations, which are reported.
class malformed_poset : public error {
 public:
  using error::error;
};

/// An argument is outside the domain of an operation (bad parameter, face
/// not incident, complex not vertex-describable, map not a covering, ...).
class precondition_error : public error {
 public:
  using error::error;
};

/// A construction or search would exceed its configured size cap.
class size_limit_error : public error {
 public:
  using error::error;
};

}  // namespace powercx
