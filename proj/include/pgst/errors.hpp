#pragma once
// Error taxonomy shared across modules. Resource caps are kept distinct from
// malformed input so the CLI can map them to different exit codes.
#include <stdexcept>
#include <string>

namespace pgst {

// A computation would exceed a configured size cap (e.g. vertex count).
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace pgst
