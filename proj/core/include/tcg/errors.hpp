#pragma once

#include <stdexcept>
#include <string>

namespace tcg {

enum class errc {
  no_half,
  no_third,
  no_antifixed_unit,
  ring_mismatch,
  not_invertible,
  param_constraint_violated,
  not_based_at_identity,
  singular_basis,
  sign_fix_failed,
  unsupported_kind,
  usage_error,
  io_error,
  parse_error,
};

const char* name_of(errc c);

/// Exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(name_of(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace tcg
