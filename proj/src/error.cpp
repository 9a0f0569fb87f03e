// SPDX-License-Identifier: Apache-2.0
#include "pmig/error.hpp"

namespace pmig {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::None: return "None";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidCombination: return "InvalidCombination";
    case Errc::UnknownPid: return "UnknownPid";
    case Errc::UnknownMedium: return "UnknownMedium";
    case Errc::UnknownSubsystem: return "UnknownSubsystem";
    case Errc::UnknownRegion: return "UnknownRegion";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::RegistryBusy: return "RegistryBusy";
    case Errc::NotFound: return "NotFound";
    case Errc::Busy: return "Busy";
    case Errc::AlreadyTerminal: return "AlreadyTerminal";
    case Errc::QuiesceTimeout: return "QuiesceTimeout";
    case Errc::PageFault: return "PageFault";
    case Errc::IncompleteState: return "IncompleteState";
    case Errc::ChecksumMismatch: return "ChecksumMismatch";
    case Errc::Timeout: return "Timeout";
    case Errc::BackpressureTimeout: return "BackpressureTimeout";
    case Errc::ChannelClosed: return "ChannelClosed";
    case Errc::TruncatedStream: return "TruncatedStream";
    case Errc::ConnectRefused: return "ConnectRefused";
    case Errc::ProtocolError: return "ProtocolError";
    case Errc::UnsupportedCommand: return "UnsupportedCommand";
    case Errc::MediumError: return "MediumError";
    case Errc::CapabilityMismatch: return "CapabilityMismatch";
    case Errc::VersionMismatch: return "VersionMismatch";
    case Errc::RejectedByPolicy: return "RejectedByPolicy";
    case Errc::SourceGone: return "SourceGone";
    case Errc::EventFailed: return "EventFailed";
    case Errc::EventFrozen: return "EventFrozen";
    case Errc::UsageError: return "UsageError";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

int exit_code(Errc code) {
  if (code == Errc::None) return 0;
  // Stable, documented mapping: 10 + enum ordinal.
  return 10 + static_cast<int>(code);
}

void fail(Errc code, const std::string& message) {
  throw PmError(code, message);
}

}  // namespace pmig
