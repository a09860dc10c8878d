#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gplab {

// Invalid catalog name or parameter.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition failed on the supplied data.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonContractionError : public std::runtime_error {
 public:
  NonContractionError(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}
  int iterations() const { return iterations_; }

 private:
  int iterations_;
};

class BlowUpError : public std::runtime_error {
 public:
  BlowUpError(const std::string& what, long step)
      : std::runtime_error(what), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

class QuadratureStall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitDegenerate : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : std::runtime_error(key.empty() ? what : key + ": " + what), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

class MissingSeries : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gplab
