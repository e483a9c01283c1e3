#pragma once

#include <stdexcept>
#include <string>

namespace trigpoly {

enum class Errc {
  precision_too_low,
  overflow_guard,
  domain,
  invalid_argument,
  limit_exceeded,
  io,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace trigpoly
