#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pathweights {

enum class ErrorCode {
  InvalidArgument,
  IndexError,
  InvalidMatrix,
  NotPositiveDefinite,
  NotAdapted,
  InvalidPath,
  PathExplosion,
  UndefinedShare,
  NotConverged,
  ParseError,
  IoError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class PathExplosionError : public Error {
 public:
  PathExplosionError(std::size_t reached, std::size_t cap);

  /// Number of paths found when enumeration was aborted (cap + 1).
  std::size_t reached() const noexcept { return reached_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t reached_;
  std::size_t cap_;
};

struct NonAdaptedEntry {
  std::string u;
  std::string v;
  /// |kappa_uv| / sqrt(kappa_uu kappa_vv)
  double magnitude;
};

class NotAdaptedError : public Error {
 public:
  NotAdaptedError(std::vector<NonAdaptedEntry> offending, double tol);

  const std::vector<NonAdaptedEntry>& offending() const noexcept {
    return offending_;
  }

 private:
  std::vector<NonAdaptedEntry> offending_;
};

class NotConvergedError : public Error {
 public:
  NotConvergedError(std::size_t iterations, double last_change);

  std::size_t iterations() const noexcept { return iterations_; }
  double last_change() const noexcept { return last_change_; }

 private:
  std::size_t iterations_;
  double last_change_;
};

class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& message)
      : Error(ErrorCode::ParseError, where + ": " + message),
        where_(std::move(where)) {}

  /// File/line/field location of the problem.
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

}  // namespace pathweights
