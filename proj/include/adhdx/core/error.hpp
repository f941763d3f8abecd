#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace adhdx {

// Exit-code families used by the CLI: config=2, data=3, numeric=4.
enum class ErrorFamily : int { Config = 2, Data = 3, Numeric = 4 };

// All library errors carry a short machine-readable code ("header_mismatch",
// "unknown_category", ...) plus a human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorFamily family, std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message),
        family_(family),
        code_(std::move(code)) {}

  ErrorFamily family() const noexcept { return family_; }
  const std::string& code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(family_); }

 private:
  ErrorFamily family_;
  std::string code_;
};

struct ConfigError : Error {
  ConfigError(std::string code, const std::string& msg)
      : Error(ErrorFamily::Config, std::move(code), msg) {}
};

struct DataError : Error {
  DataError(std::string code, const std::string& msg)
      : Error(ErrorFamily::Data, std::move(code), msg) {}
};

struct NumericError : Error {
  NumericError(std::string code, const std::string& msg)
      : Error(ErrorFamily::Numeric, std::move(code), msg) {}
};

}  // namespace adhdx
