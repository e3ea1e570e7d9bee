#pragma once

#include <stdexcept>
#include <string>

namespace lbcn {

enum class ErrorCode {
  invalid_params,
  dimension_mismatch,
  message_out_of_range,
  secret_out_of_range,
  share_out_of_range,
  retry_exhausted,
  threshold_too_large,
  field_too_small,
  degenerate_dims,
  duplicate_index,
  index_zero,
  witness_invalid,
  wrong_phase,
  qual_too_small,
  unknown_strategy,
  too_few_samples,
  config_error,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Decode failures carry their own taxonomy so the CLI can map them to exit 2.
enum class DecodeErrorKind { malformed, bad_magic, version_unsupported, digest_mismatch };

class DecodeError : public std::runtime_error {
 public:
  DecodeError(DecodeErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  DecodeErrorKind kind() const { return kind_; }

 private:
  DecodeErrorKind kind_;
};

}  // namespace lbcn
