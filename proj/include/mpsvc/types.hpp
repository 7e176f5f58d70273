#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpsvc {

// All byte quantities are exact 64-bit integers; time is measured in
// 1-indexed discrete slots (1 slot = 1 second by default, configurable
// at the ingestion boundary only).
using Bytes = std::int64_t;
using Slot = std::int64_t;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a no-skip schedule cannot deliver every base layer within
// the configured stall horizon.
class InfeasibleStall : public std::runtime_error {
 public:
  explicit InfeasibleStall(const std::string& what) : std::runtime_error(what) {}
};

// Skip-based streaming drops chunks that miss their deadline; no-skip
// streaming stalls playback until the base layer arrives.
enum class Mode { kSkip, kNoSkip };

}  // namespace mpsvc
