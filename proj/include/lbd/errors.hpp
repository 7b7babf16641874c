#pragma once

#include <stdexcept>
#include <string>

namespace lbd {

// Base class for all toolkit failures.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid configuration: bad keys, unusable values, missing required settings.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed or unreadable input data (corrupt stream, bad schema, ...).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

// A required snapshot or resource file is absent. Carries the missing path.
class FixtureError : public Error {
 public:
  FixtureError(const std::string& what, std::string path)
      : Error(what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A key (term, node, heading) was not found where the operation requires it.
class LookupError : public Error {
 public:
  explicit LookupError(const std::string& what) : Error(what) {}
};

}  // namespace lbd
