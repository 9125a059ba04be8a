#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twep {

/// Operands disagree on register dimension or register count.
class DimensionMismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed Pauli text. `position` is the zero-based character offset of the problem.
class ParseError : public std::invalid_argument {
   public:
    enum class Kind {
        Syntax,
        /// A token that is valid for some dimension but not the requested one (e.g. `Y` for qutrits).
        LetterForDimension,
    };

    ParseError(Kind kind, const std::string &message, std::size_t position)
        : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"),
          kind_(kind),
          position_(position) {
    }
    Kind kind() const noexcept {
        return kind_;
    }
    std::size_t position() const noexcept {
        return position_;
    }

   private:
    Kind kind_;
    std::size_t position_;
};

/// An exhaustive enumeration would exceed its configured bound. Never silently truncated.
class SizeLimitError : public std::length_error {
   public:
    using std::length_error::length_error;
};

}  // namespace twep
