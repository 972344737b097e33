#pragma once

#include <stdexcept>
#include <string>

namespace netdt {

// Configuration / input errors. The CLI maps these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Everything else maps to exit code 3.
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& what) : std::runtime_error(what) {}
};

// A policy returned an action the simulator cannot apply. Signals a policy
// bug; never silently clamped.
class InvalidActionError : public RuntimeError {
 public:
  explicit InvalidActionError(const std::string& what) : RuntimeError(what) {}
};

// A signaling message violates the schema (missing mandatory IE, bad
// interface/direction pairing, out-of-range value).
class SchemaViolation : public RuntimeError {
 public:
  explicit SchemaViolation(const std::string& what) : RuntimeError(what) {}
};

// A token sequence cannot be decoded back into a message.
class MalformedSequence : public RuntimeError {
 public:
  explicit MalformedSequence(const std::string& what) : RuntimeError(what) {}
};

// Tensor shapes do not line up.
class ShapeMismatch : public RuntimeError {
 public:
  explicit ShapeMismatch(const std::string& what) : RuntimeError(what) {}
};

// Model/dataset/config disagreement (vocab sizes, context lengths, ...).
class ConfigMismatch : public RuntimeError {
 public:
  explicit ConfigMismatch(const std::string& what) : RuntimeError(what) {}
};

// Persisted file is unreadable or from an incompatible schema version.
class CorruptFile : public RuntimeError {
 public:
  explicit CorruptFile(const std::string& what) : RuntimeError(what) {}
};

class SchemaVersionMismatch : public RuntimeError {
 public:
  explicit SchemaVersionMismatch(const std::string& what)
      : RuntimeError(what) {}
};

}  // namespace netdt
