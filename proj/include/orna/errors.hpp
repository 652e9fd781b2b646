#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orna {

/// Malformed textual input (parenthesis strings, g-sequences, JSON payloads).
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A precondition on the mathematical domain was violated (bad node id,
/// mismatched trees, operation outside its defined range).
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class ResourceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; indicates a bug, not bad input.
class IntegrityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace orna
