#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ordgraph/error.hpp"

namespace ordgraph::detail {

// Whitespace-insensitive scanner over a term string. Positions reported in
// errors are byte offsets into the original text.
class cursor {
 public:
  cursor(std::string_view text, std::size_t& pos) : text_(text), pos_(pos) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[nodiscard]] bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool peek(std::string_view tok) {
    skip_ws();
    return text_.substr(pos_, tok.size()) == tok;
  }

  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail({"'" + std::string(tok) + "'"});
  }

  unsigned long long natural() {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (v > 1'000'000) fail({"natural number below 10^6"});
      ++pos_;
    }
    if (start == pos_) fail({"natural number"});
    return v;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw syntax_error(pos_, std::move(expected), context());
  }

  [[nodiscard]] std::size_t position() const noexcept { return pos_; }

 private:
  std::string context() const {
    if (pos_ >= text_.size()) return "at end of input";
    return "near '" + std::string(text_.substr(pos_, 12)) + "'";
  }

  std::string_view text_;
  std::size_t& pos_;
};

}  // namespace ordgraph::detail
