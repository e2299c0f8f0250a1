#pragma once

#include <stdexcept>
#include <string>

namespace celebrity {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A domain invariant was violated (bad game parameters, malformed strategy,
// mismatched player counts, ...). The message names the invariant.
struct ValidationError : Error {
  using Error::Error;
};

// Malformed input text. `line` is 1-based; 0 means the document as a whole.
struct ParseError : Error {
  int line;
  ParseError(int line_number, const std::string& message)
      : Error(line_number > 0
                  ? "line " + std::to_string(line_number) + ": " + message
                  : message),
        line(line_number) {}
};

// Exhaustive search was requested beyond its configured size limit.
struct InstanceTooLarge : Error {
  using Error::Error;
};

// A beta=1-only operation was invoked on a game with beta != 1.
struct WrongBeta : Error {
  using Error::Error;
};

// Price/verification queries require an exhaustively enumerated NE set.
struct NotExhaustive : Error {
  using Error::Error;
};

}  // namespace celebrity
