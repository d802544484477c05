#include "circ/error.hpp"

namespace circ {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::OffsetOutOfRange: return "OffsetOutOfRange";
    case Errc::DuplicateOffset: return "DuplicateOffset";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::ShareUndefined: return "ShareUndefined";
    case Errc::NotInCode: return "NotInCode";
    case Errc::UnsupportedOrder: return "UnsupportedOrder";
    case Errc::OracleTooLarge: return "OracleTooLarge";
    case Errc::Overflow: return "Overflow";
  }
  return "Unknown";
}

}  // namespace circ
