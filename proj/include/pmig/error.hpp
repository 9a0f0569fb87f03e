// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pmig {

// Every failure surfaced by the framework carries one of these codes.
// The CLI maps them 1:1 onto process exit codes (see exit_code()).
enum class Errc : std::uint8_t {
  None = 0,
  InvalidArgument,
  InvalidCombination,
  UnknownPid,
  UnknownMedium,
  UnknownSubsystem,
  UnknownRegion,
  DuplicateId,
  RegistryBusy,
  NotFound,
  Busy,
  AlreadyTerminal,
  QuiesceTimeout,
  PageFault,
  IncompleteState,
  ChecksumMismatch,
  Timeout,
  BackpressureTimeout,
  ChannelClosed,
  TruncatedStream,
  ConnectRefused,
  ProtocolError,
  UnsupportedCommand,
  MediumError,
  CapabilityMismatch,
  VersionMismatch,
  RejectedByPolicy,
  SourceGone,
  EventFailed,
  EventFrozen,
  UsageError,
  IoError,
};

const char* errc_name(Errc code);

// CLI exit code for a failure class. 0 is success, 1 is reserved for
// unexpected/internal errors, 2 for CLI usage errors.
int exit_code(Errc code);

class PmError : public std::runtime_error {
 public:
  PmError(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace pmig
