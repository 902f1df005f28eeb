#pragma once

#include <stdexcept>
#include <string>

namespace vidaug {

// Invalid parameters, incompatible operands, unknown names.
// The CLI maps this to exit code 1.
class ValueError : public std::invalid_argument {
 public:
  explicit ValueError(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed clip containers, sidecars, configs. CLI exit code 2.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem-level failures (missing file, unreadable directory). CLI exit code 2.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vidaug
