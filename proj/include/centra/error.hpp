#pragma once

#include <stdexcept>
#include <string>

namespace centra {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input: cycle notation, table files, group specs.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A multiplication table that fails one of the group laws.
/// `law()` is one of "shape", "range", "identity", "latin", "inverse",
/// "associativity", "labels".
class GroupLawError : public Error {
 public:
  GroupLawError(std::string law, const std::string& detail)
      : Error("group law violated: " + law + (detail.empty() ? "" : " (" + detail + ")")),
        law_(std::move(law)) {}

  const std::string& law() const noexcept { return law_; }

 private:
  std::string law_;
};

/// Enumeration would produce a group larger than the configured bound.
class OrderBoundError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (abelian group passed to a
/// graph constructor, a set that is not a transversal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A file could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A computed structure contradicts an identity the library relies on.
/// Never expected on correct input; raised instead of returning silently.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace centra
