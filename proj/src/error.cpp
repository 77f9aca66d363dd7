#include "dl/error.hpp"

namespace dl {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::NoConstantTerm: return "NoConstantTerm";
    case Errc::EmptyWord: return "EmptyWord";
    case Errc::NotInadmissible: return "NotInadmissible";
    case Errc::UnstableWord: return "UnstableWord";
    case Errc::UnsupportedFlavor: return "UnsupportedFlavor";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::DegreeBeyondCap: return "DegreeBeyondCap";
    case Errc::CapTooSmall: return "CapTooSmall";
    case Errc::MalformedIdentityArgs: return "MalformedIdentityArgs";
    case Errc::NonHomogeneous: return "NonHomogeneous";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::Unsupported: return "Unsupported";
  }
  return "Error";
}

}  // namespace dl
