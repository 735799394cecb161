#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace bomega {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two elements over different families met in one operation.
struct FamilyMismatchError : Error {
  using Error::Error;
};

/// Input outside an operation's supported domain, e.g. Green's relations
/// on the endomorphism semigroup applied to an injective endomorphism.
struct UnsupportedInputError : Error {
  using Error::Error;
};

/// Surface-grammar parse failure. `pos` is the byte offset of the
/// offending character, `expected` names the grammar token wanted there.
struct ParseError : Error {
  std::size_t pos;
  std::string expected;

  ParseError(const std::string& msg, std::size_t pos_, std::string expected_)
      : Error(msg), pos(pos_), expected(std::move(expected_)) {}
};

}  // namespace bomega
