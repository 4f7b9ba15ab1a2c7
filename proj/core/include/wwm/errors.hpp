#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wwm {

/// A numerical contract was violated: truncation instability, an imaginary
/// residue where a real number was required, or an inadequate grid.
class NumericalContractError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TruncationError : public NumericalContractError {
 public:
  using NumericalContractError::NumericalContractError;
};

class ImaginaryResidueError : public NumericalContractError {
 public:
  using NumericalContractError::NumericalContractError;
};

class GridError : public NumericalContractError {
 public:
  using NumericalContractError::NumericalContractError;
};

/// Raised by the expression parser. `offset` is the byte offset into the
/// source text where the problem was detected.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { lexical, unexpected_token, mode_violation };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

}  // namespace wwm
