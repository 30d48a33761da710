#pragma once

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "nsgff/classify.hpp"
#include "nsgff/error.hpp"
#include "nsgff/relative_ideal.hpp"

namespace nsgff {

class ExpressionError : public Error {
 public:
  ExpressionError(std::size_t position, const std::string& what)
      : Error(ErrorCode::parse_error,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Evaluates ideal expressions over a fixed semigroup.
///
///   expr := term (':' term)*      colon, left associative
///   term := atom ('*' atom)*      product, binds tighter than ':'
///   atom := 'H' | 'C' | 'K' | 'N' | '{' int (',' int)* '}' | '(' expr ')'
///
/// H is the unit ideal, C the canonical ideal, K the conductor and N the
/// integral closure.
class IdealExpression {
 public:
  IdealExpression(NumericalSemigroup h, std::string_view text)
      : h_(std::move(h)), text_(text) {}

  RelativeIdeal evaluate() {
    pos_ = 0;
    auto out = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError(pos_, what);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RelativeIdeal parse_expr() {
    auto lhs = parse_term();
    while (accept(':')) lhs = ideal_colon(lhs, parse_term());
    return lhs;
  }

  RelativeIdeal parse_term() {
    auto lhs = parse_atom();
    while (accept('*')) lhs = ideal_product(lhs, parse_atom());
    return lhs;
  }

  RelativeIdeal parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    switch (c) {
      case 'H': ++pos_; return unit_ideal(h_);
      case 'C': ++pos_; return canonical_ideal(h_);
      case 'K': ++pos_; return conductor_ideal(h_);
      case 'N': ++pos_; return normalization_ideal(h_);
      case '(': {
        ++pos_;
        auto inner = parse_expr();
        if (!accept(')')) fail("expected ')'");
        return inner;
      }
      case '{': {
        ++pos_;
        std::vector<Int> gens{parse_int()};
        while (accept(',')) gens.push_back(parse_int());
        if (!accept('}')) fail("expected '}'");
        return RelativeIdeal(h_, gens);
      }
      default:
        fail(std::string("unexpected '") + c + "'");
    }
  }

  Int parse_int() {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    Int value = 0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    if (value > kMaxGenerator || value < -kMaxGenerator) {
      fail("integer out of range");
    }
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  NumericalSemigroup h_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

inline RelativeIdeal evaluate_ideal_expression(const NumericalSemigroup& h,
                                               std::string_view text) {
  return IdealExpression(h, text).evaluate();
}

}  // namespace nsgff
