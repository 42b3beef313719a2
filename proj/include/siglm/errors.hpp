#pragma once

#include <stdexcept>
#include <string>

namespace siglm {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// ConfigError -> 2, IntegrityError -> 3, everything else -> 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// Data that fails structural or checksum validation.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

class RemoteUnavailable : public Error {
 public:
  using Error::Error;
};

class FixtureExhausted : public Error {
 public:
  using Error::Error;
};

class EmptyIndex : public Error {
 public:
  using Error::Error;
};

class DecompositionParseError : public Error {
 public:
  using Error::Error;
};

class CyclicPlanError : public Error {
 public:
  using Error::Error;
};

class PredictorMissing : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

class CorruptPayload : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

class PoolTooSmall : public Error {
 public:
  using Error::Error;
};

class LlmProposalFailed : public Error {
 public:
  using Error::Error;
};

class SingleClassError : public Error {
 public:
  using Error::Error;
};

class EmptyBand : public Error {
 public:
  using Error::Error;
};

class FrameTooShort : public Error {
 public:
  using Error::Error;
};

}  // namespace siglm
