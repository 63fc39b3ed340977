#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace parageo {

/// Base class for every error this library throws deliberately.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
public:
  SyntaxError(std::size_t offset, std::string expected)
      : Error("syntax error at offset " + std::to_string(offset) +
              ": expected " + expected),
        offset(offset),
        expected(std::move(expected)) {}

  std::size_t offset;
  std::string expected;
};

class UnknownFunction : public Error {
public:
  UnknownFunction(std::size_t offset, std::string name)
      : Error("unknown function '" + name + "' at offset " +
              std::to_string(offset)),
        offset(offset),
        name(std::move(name)) {}

  std::size_t offset;
  std::string name;
};

class UnboundVariable : public Error {
public:
  explicit UnboundVariable(std::string name)
      : Error("unbound variable '" + name + "'"), name(std::move(name)) {}

  std::string name;
};

class DomainError : public Error {
public:
  using Error::Error;
};

class DegenerateMetric : public Error {
public:
  DegenerateMetric(double det, double threshold)
      : Error("degenerate metric: |det| = " + std::to_string(det) +
              " below threshold " + std::to_string(threshold)),
        det(det),
        threshold(threshold) {}

  double det;
  double threshold;
};

class RankDeficient : public Error {
public:
  using Error::Error;
};

class NonPositiveWarp : public Error {
public:
  using Error::Error;
};

class MissingWarpData : public Error {
public:
  using Error::Error;
};

class NoAdmissiblePoints : public Error {
public:
  using Error::Error;
};

class ConfigError : public Error {
public:
  ConfigError(std::string path, std::string field, std::string reason)
      : Error("config error [" + path + "] field '" + field + "': " + reason),
        path(std::move(path)),
        field(std::move(field)),
        reason(std::move(reason)) {}

  std::string path;
  std::string field;
  std::string reason;
};

}  // namespace parageo
