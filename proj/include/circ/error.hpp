#pragma once

#include <stdexcept>
#include <string>

namespace circ {

enum class Errc {
  InvalidArgument,
  OffsetOutOfRange,
  DuplicateOffset,
  VertexOutOfRange,
  ShareUndefined,
  NotInCode,
  UnsupportedOrder,
  OracleTooLarge,
  Overflow,
};

const char* to_string(Errc code) noexcept;

/// Exception carrying a machine-checkable error category. Every precondition
/// violation in the library surfaces as one of these.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace circ
