#pragma once

#include <stdexcept>
#include <string>

namespace pdegen {

// Base for everything this library throws.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Tensor/operator shape mismatch; message names the offending dimension.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Bad run configuration; carries the 1-based line of the offending key when
// the problem is tied to a config file line (0 = not line specific).
class ConfigError : public Error {
 public:
  ConfigError(const std::string& what, int line = 0) : Error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_ = 0;
};

// Non-finite value encountered (diverged loss, NaN gradient, ...).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Transport-level failure; carries the rank where the failure surfaced.
class TransportError : public Error {
 public:
  TransportError(const std::string& what, int rank) : Error(what), rank_(rank) {}
  int rank() const { return rank_; }

 private:
  int rank_;
};

// A collective timed out waiting for a peer; names the lagging rank.
class CollectiveTimeout : public TransportError {
 public:
  CollectiveTimeout(const std::string& what, int lagging_rank)
      : TransportError(what, lagging_rank) {}
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdegen
