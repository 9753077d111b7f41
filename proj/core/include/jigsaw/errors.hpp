#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace jigsaw {

/// Failure taxonomy for the whole toolkit. Every value names a protocol
/// gate; diagnostics print the enum name verbatim so callers can grep for
/// the gate that rejected an input.
enum class Errc {
  // framing / all-or-nothing transform
  BadMagic,
  BadChecksum,
  BadLength,
  LengthNotBlockAligned,
  TooFewBlocks,
  // prime-field polynomial codec
  DuplicateRoot,
  RootOutOfRange,
  DuplicateX,
  SingularSystem,  // reserved: cannot occur over a field with distinct x
  NotPrime,
  // fragmentation
  MessageTooSmall,
  TooManyFragments,
  SpecMismatch,
  LengthMismatch,
  Exhausted,
  FragmentTooLarge,
  InconsistentRoots,
  DegenerateInterval,
  // packets
  InvariantViolation,
  MacMismatch,
  MalformedPacket,
  // sender/receiver pipeline
  SeqMismatch,
  InterpolationFailure,
  RootCountMismatch,
  ReassemblyExhausted,
  IntegrityFailure,
  // simulated network
  NotEnoughPaths,
  NodeNotFound,
  ArityMismatch,
  InvalidTopology,
  // tooling
  IoError,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  explicit Error(Errc code, const std::string& detail = "");

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

  /// Optional numeric payload. NotEnoughPaths carries the achievable path
  /// count; packet-level failures carry the offending packet index.
  std::optional<uint64_t> aux;

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");
[[noreturn]] void fail_aux(Errc code, uint64_t aux, const std::string& detail = "");

}  // namespace jigsaw
