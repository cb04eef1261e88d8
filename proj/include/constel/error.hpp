#pragma once

#include <stdexcept>
#include <string>

namespace constel {

/// Error categories surfaced by the library. The CLI maps these onto exit
/// codes: configuration/input problems -> 2, numerical/solver problems -> 3.
enum class errc {
  invalid_point,
  invalid_count,
  insufficient_points,
  radius_mismatch,
  cardinality_mismatch,
  invalid_inclination,
  size_limit,
  invalid_cost,
  internal_invariant,
  config_parse,
  config_invalid,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

  /// True for errors caused by bad input or configuration.
  bool is_config() const noexcept {
    return code_ != errc::invalid_cost && code_ != errc::internal_invariant;
  }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace constel
