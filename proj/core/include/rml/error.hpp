#pragma once

#include <stdexcept>
#include <string>

namespace rml {

/// Library error carrying a stable machine-readable code ("ZeroForm",
/// "PoleAtOrigin", ...) next to the human message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Raised for malformed or invalid input documents; the message carries the
/// offending field path.
class InputError : public Error {
 public:
  InputError(const std::string& path, const std::string& message)
      : Error("InputError", path + ": " + message), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace rml
