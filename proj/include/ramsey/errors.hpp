#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Malformed graph spec text. `position` is the 0-based byte offset of the
/// offending token.
class SpecError : public std::runtime_error {
public:
  SpecError(const std::string &what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An input exceeded a hard size limit (vertex cap, exact-mode order, ...).
class LimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph6 text.
class Graph6Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A closed-form formula was applied outside its hypotheses.
class HypothesisError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A self-verifying construction failed its own check.
class VerificationError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace ramsey
