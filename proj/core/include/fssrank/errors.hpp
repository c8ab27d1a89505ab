#pragma once

#include <stdexcept>
#include <string>

namespace fssrank {

// CLI exit codes; exceptions thrown by the library map onto these.
enum class ExitCode : int { ok = 0, validation = 1, io = 2, compute = 3 };

// Unreadable or missing files, failed writes.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed or inconsistent input data.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Operation called outside its domain (empty populations, undefined statistics).
class ComputeError : public std::runtime_error {
 public:
  explicit ComputeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fssrank
