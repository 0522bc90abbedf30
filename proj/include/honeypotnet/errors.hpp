#pragma once

#include <stdexcept>
#include <string>

namespace hpnet {

/// Invalid wiring or parameters detected while building a component
/// (layer shape mismatch, bad descriptor, malformed config).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A caller violated an operation precondition (out-of-range label,
/// unlabeled dataset where labels are required, stale cache, ...).
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Serialization failure. Message carries the byte offset where the
/// file stopped making sense.
class CodecError : public std::runtime_error {
 public:
  explicit CodecError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Non-finite value where one is not allowed (diverged training,
/// NaN gradient). Message names the stage/epoch that produced it.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hpnet
