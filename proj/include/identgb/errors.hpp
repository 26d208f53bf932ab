#ifndef IDENTGB_ERRORS_HPP
#define IDENTGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace identgb {

/// Model/DSL/system-text syntax or semantic error. CLI exit code 2.
class parse_error : public std::runtime_error {
  public:
    parse_error(std::string msg, int line = 0, int column = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + msg
                                    : msg)
      , line_(line)
      , column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// A stage exceeded its deadline. CLI exit code 3.
class timeout_error : public std::runtime_error {
  public:
    explicit timeout_error(const std::string& stage) : std::runtime_error("timeout in " + stage) {}
};

/// Internal consistency check failed. CLI exit code 4.
class invariant_error : public std::logic_error {
  public:
    explicit invariant_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace identgb

#endif
