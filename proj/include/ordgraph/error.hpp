#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ordgraph {

/// Base of every exception raised by the library. `category()` drives the
/// CLI exit-code mapping.
class error : public std::runtime_error {
 public:
  enum class kind { syntax, precondition, budget };

  error(kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}

  [[nodiscard]] kind category() const noexcept { return kind_; }

 private:
  kind kind_;
};

class syntax_error : public error {
 public:
  syntax_error(std::size_t position, std::vector<std::string> expected,
               const std::string& context = {})
      : error(kind::syntax, format(position, expected, context)),
        position_(position),
        expected_(std::move(expected)) {}

  [[nodiscard]] std::size_t position() const noexcept { return position_; }
  [[nodiscard]] const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(std::size_t pos, const std::vector<std::string>& exp,
                            const std::string& context) {
    std::string s = "syntax error at position " + std::to_string(pos) + ": expected ";
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (i) s += i + 1 == exp.size() ? " or " : ", ";
      s += exp[i];
    }
    if (!context.empty()) s += " (" + context + ")";
    return s;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

/// Malformed input document (JSON shape, wrong field types).
class format_error : public error {
 public:
  explicit format_error(const std::string& what) : error(kind::syntax, what) {}
};

class not_normal_form : public error {
 public:
  explicit not_normal_form(const std::string& what)
      : error(kind::precondition, "not in normal form: " + what) {}
};

class class_violation : public error {
 public:
  explicit class_violation(const std::string& what)
      : error(kind::precondition, "term is not below Om_omega: " + what) {}
};

/// An element id outside the carrier, an unknown vertex, a mismatched
/// carrier, an unassignable tree, and similar violated preconditions.
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(kind::precondition, what) {}
};

class foreign_element : public precondition_error {
 public:
  explicit foreign_element(const std::string& what)
      : precondition_error("foreign element: " + what) {}
};

class not_assignable : public precondition_error {
 public:
  explicit not_assignable(const std::string& what)
      : precondition_error("tree is not assignable: " + what) {}
};

class bound_exceeded : public error {
 public:
  explicit bound_exceeded(const std::string& what)
      : error(kind::budget, "search budget exceeded: " + what) {}
};

}  // namespace ordgraph
