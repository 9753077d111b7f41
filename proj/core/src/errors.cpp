#include "jigsaw/errors.hpp"

namespace jigsaw {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::BadMagic: return "BadMagic";
    case Errc::BadChecksum: return "BadChecksum";
    case Errc::BadLength: return "BadLength";
    case Errc::LengthNotBlockAligned: return "LengthNotBlockAligned";
    case Errc::TooFewBlocks: return "TooFewBlocks";
    case Errc::DuplicateRoot: return "DuplicateRoot";
    case Errc::RootOutOfRange: return "RootOutOfRange";
    case Errc::DuplicateX: return "DuplicateX";
    case Errc::SingularSystem: return "SingularSystem";
    case Errc::NotPrime: return "NotPrime";
    case Errc::MessageTooSmall: return "MessageTooSmall";
    case Errc::TooManyFragments: return "TooManyFragments";
    case Errc::SpecMismatch: return "SpecMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::Exhausted: return "Exhausted";
    case Errc::FragmentTooLarge: return "FragmentTooLarge";
    case Errc::InconsistentRoots: return "InconsistentRoots";
    case Errc::DegenerateInterval: return "DegenerateInterval";
    case Errc::InvariantViolation: return "InvariantViolation";
    case Errc::MacMismatch: return "MacMismatch";
    case Errc::MalformedPacket: return "MalformedPacket";
    case Errc::SeqMismatch: return "SeqMismatch";
    case Errc::InterpolationFailure: return "InterpolationFailure";
    case Errc::RootCountMismatch: return "RootCountMismatch";
    case Errc::ReassemblyExhausted: return "ReassemblyExhausted";
    case Errc::IntegrityFailure: return "IntegrityFailure";
    case Errc::NotEnoughPaths: return "NotEnoughPaths";
    case Errc::NodeNotFound: return "NodeNotFound";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::InvalidTopology: return "InvalidTopology";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

namespace {
std::string compose(Errc code, const std::string& detail) {
  std::string msg = errc_name(code);
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

void fail_aux(Errc code, uint64_t aux, const std::string& detail) {
  Error e(code, detail);
  e.aux = aux;
  throw e;
}

}  // namespace jigsaw
