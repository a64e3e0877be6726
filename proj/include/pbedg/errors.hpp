#pragma once

#include <stdexcept>
#include <string>

namespace pbedg {

// Base for all solver errors so callers can catch the whole family at once.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

// Non-finite sample while projecting initial data; names the offending cell.
class ProjectionFailure : public Error {
 public:
  ProjectionFailure(int cell, const std::string& msg) : Error(msg), cell(cell) {}
  int cell;
};

// Non-finite flux or derivative during RHS assembly.
class DivergedState : public Error {
 public:
  DivergedState(int cell, int point, const std::string& msg)
      : Error(msg), cell(cell), point(point) {}
  int cell;
  int point;
};

// Operation precondition on the state violated (e.g. nonpositive averages).
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& msg) : Error(msg) {}
};

// Closed form queried outside its validity window.
class ValidityError : public Error {
 public:
  explicit ValidityError(const std::string& msg) : Error(msg) {}
};

// Reference quadrature failed to converge.
class OracleFailure : public Error {
 public:
  explicit OracleFailure(const std::string& msg) : Error(msg) {}
};

class UnresolvableInitialData : public Error {
 public:
  explicit UnresolvableInitialData(const std::string& msg) : Error(msg) {}
};

// Time loop exhausted its halving budget; carries a short trace summary.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& msg, double time, double dt, int halvings)
      : Error(msg), time(time), dt(dt), halvings(halvings) {}
  double time;
  double dt;
  int halvings;
};

// Config parsing/validation problem; names the offending field path.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& field, const std::string& msg)
      : Error(field + ": " + msg), field(field) {}
  std::string field;
};

}  // namespace pbedg
